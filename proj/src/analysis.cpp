#include "irs/analysis.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "irs/errors.hpp"

namespace irs {

namespace {

double real_form(const CMatrix& a, const CVector& v) { return (v.adjoint() * a * v)(0, 0).real(); }

void require_gains(std::span<const double> user_gain, std::span<const double> bs_gain, int elements_per_irs,
                   double noise_variance, const char* who) {
  if (user_gain.size() != bs_gain.size() || user_gain.empty())
    throw StructuralError(std::string(who) + ": gain vectors must be nonempty and of equal length");
  if (elements_per_irs < 1) throw InvalidArgument(std::string(who) + ": L must be >= 1");
  if (!(noise_variance > 0.0)) throw InvalidArgument(std::string(who) + ": sigma2 must be > 0");
  for (std::size_t n = 0; n < user_gain.size(); ++n)
    if (!(user_gain[n] >= 0.0) || !(bs_gain[n] >= 0.0))
      throw InvalidArgument(std::string(who) + ": gains must be >= 0");
}

double rate_from_gain(double effective_gain, double transmit_power, double noise_variance) {
  return log2_1p(transmit_power / noise_variance * effective_gain);
}

}  // namespace

CMatrix build_c(const ChannelStatistics& stats) {
  const Eigen::Index nl = stats.total_elements();
  if (stats.mean_bs_irs.rows() != nl || stats.mean_bs_irs.cols() != stats.antennas ||
      stats.mean_irs_user.size() != nl || stats.nlos_bs_irs.size() != nl || stats.nlos_irs_user.size() != nl ||
      stats.correlation.rows() != nl || stats.correlation.cols() != nl)
    throw StructuralError("build_c: statistics have inconsistent dimensions");

  const double m = stats.antennas;
  const CMatrix cascade_mean = stats.mean_irs_user.asDiagonal() * stats.mean_bs_irs;
  const CVector scattered = stats.mean_irs_user.cwiseProduct(stats.nlos_bs_irs.cast<Complex>());

  CMatrix c = cascade_mean * cascade_mean.adjoint();
  c += m * (scattered.asDiagonal() * stats.correlation * scattered.conjugate().asDiagonal());

  // Terms whose expectation is diagonal; only their trace survives a
  // unit-modulus sandwich.
  const RVector k2_sq = stats.nlos_irs_user.cwiseAbs2();
  const double los_trace = k2_sq.dot(stats.mean_bs_irs.rowwise().squaredNorm());
  const double nlos_trace =
      k2_sq.cwiseProduct(stats.nlos_bs_irs.cwiseAbs2()).dot(stats.correlation.diagonal().real());
  c.diagonal().array() += (los_trace + m * nlos_trace) / static_cast<double>(nl);
  return 0.5 * (c + c.adjoint());
}

double StatMatrices::signal_form(const CVector& v) const { return real_form(signal, v); }
double StatMatrices::error_form(const CVector& v) const { return real_form(error, v); }
double StatMatrices::q_form(const CVector& v) const { return real_form(q, v); }

StatMatrices build_jq(const ChannelStatistics& stats, double noise_variance, double xi, ErrorPowerModel model) {
  if (!(noise_variance > 0.0)) throw InvalidArgument("build_jq: sigma2 must be > 0");
  if (!(xi >= 0.0)) throw InvalidArgument("build_jq: xi must be >= 0");

  StatMatrices sm;
  sm.c = build_c(stats);
  sm.xi = xi;
  sm.antennas = stats.antennas;
  sm.total_elements = stats.total_elements();
  sm.noise_variance = noise_variance;
  sm.model = model;

  const double m = stats.antennas;
  const double nl = stats.total_elements();
  sm.gamma1 = (1.0 + xi) * m;
  sm.gamma2 = xi * m + xi * xi * m * (m + 1.0);
  sm.gamma3 = sm.gamma1 + xi * m + xi * (m + 1.0) * m * nl;
  sm.gamma4 = xi * (1.0 + nl);
  sm.cross_term = model == ErrorPowerModel::exact ? 2.0 * xi * xi * m * m * nl : 0.0;

  const Eigen::Index n = sm.total_elements;
  const CMatrix id = CMatrix::Identity(n, n);
  sm.signal = ((sm.gamma1 + xi * m * nl) / nl) * id + sm.c;
  sm.error = ((sm.gamma2 + sm.gamma3 * nl * xi + sm.cross_term) / nl) * id + sm.gamma4 * sm.c;
  sm.q = noise_variance * sm.signal + sm.error;
  return sm;
}

double statistical_snr(const CVector& v, const StatMatrices& sm, double transmit_power) {
  if (v.size() != sm.total_elements) throw StructuralError("statistical_snr: v has the wrong length");
  const double x = sm.signal_form(v);
  const double y = sm.error_form(v);
  return transmit_power * x * x / (sm.noise_variance * x + y);
}

double theorem1_rate(const ReflectionVector& v, const StatMatrices& sm, double transmit_power) {
  if (!is_unit_modulus(v.values())) throw InvalidArgument("theorem1_rate: v is not unit modulus");
  if (!(transmit_power > 0.0)) throw InvalidArgument("theorem1_rate: P must be > 0");
  return log2_1p(statistical_snr(v.values(), sm, transmit_power));
}

IrsGains IrsGains::from(const ChannelStatistics& stats) {
  IrsGains g;
  for (const IrsLink& k : stats.links) {
    g.user_gain.push_back(k.user_gain);
    g.bs_gain.push_back(k.bs_gain);
    g.bs_k.push_back(k.bs_k);
    g.user_k.push_back(k.user_k);
  }
  return g;
}

double lemma2_upsilon(const IrsGains& gains, int elements_per_irs) {
  const std::size_t n = gains.size();
  if (gains.bs_gain.size() != n || gains.bs_k.size() != n || gains.user_k.size() != n || n == 0)
    throw StructuralError("lemma2: per-IRS vectors must be nonempty and of equal length");
  if (elements_per_irs < 1) throw InvalidArgument("lemma2: L must be >= 1");

  double coherent = 0.0;
  double diffuse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ab = gains.user_gain[i] * gains.bs_gain[i];
    if (!(gains.user_gain[i] >= 0.0) || !(gains.bs_gain[i] >= 0.0))
      throw InvalidArgument("lemma2: gains must be >= 0");
    // K1 K2 / ((K1+1)(K2+1)) and its complement (K1 + K2 + 1) / ((K1+1)(K2+1)).
    const double los = gains.bs_k[i].los_fraction() * gains.user_k[i].los_fraction();
    coherent += std::sqrt(ab * los);
    diffuse += ab * (1.0 - los);
  }
  const double l = elements_per_irs;
  return l * l * coherent * coherent + l * diffuse;
}

double lemma2_rate(const IrsGains& gains, int elements_per_irs, double transmit_power, double noise_variance) {
  if (!(noise_variance > 0.0)) throw InvalidArgument("lemma2: sigma2 must be > 0");
  if (!(transmit_power >= 0.0)) throw InvalidArgument("lemma2: P must be >= 0");
  return rate_from_gain(1.0 + lemma2_upsilon(gains, elements_per_irs), transmit_power, noise_variance);
}

double case1_rate(std::span<const double> user_gain, std::span<const double> bs_gain, int elements_per_irs,
                  double transmit_power, double noise_variance) {
  const int all_count = static_cast<int>(user_gain.size());
  std::vector<int> all(static_cast<std::size_t>(all_count));
  for (int i = 0; i < all_count; ++i) all[static_cast<std::size_t>(i)] = i;
  return case3_rate(user_gain, bs_gain, elements_per_irs, all, transmit_power, noise_variance).rate;
}

double case2_rate(std::span<const double> user_gain, std::span<const double> bs_gain, int elements_per_irs,
                  double transmit_power, double noise_variance) {
  return case3_rate(user_gain, bs_gain, elements_per_irs, {}, transmit_power, noise_variance).rate;
}

double case2_bound(int irs_count, int elements_per_irs, double transmit_power, double noise_variance) {
  if (irs_count < 1 || elements_per_irs < 1) throw InvalidArgument("case2_bound: N and L must be >= 1");
  if (!(noise_variance > 0.0)) throw InvalidArgument("case2_bound: sigma2 must be > 0");
  return rate_from_gain(1.0 + static_cast<double>(elements_per_irs) * irs_count, transmit_power,
                        noise_variance);
}

HybridRate case3_rate(std::span<const double> user_gain, std::span<const double> bs_gain, int elements_per_irs,
                      std::span<const int> pure_los_set, double transmit_power, double noise_variance) {
  require_gains(user_gain, bs_gain, elements_per_irs, noise_variance, "case_rate");
  const int n = static_cast<int>(user_gain.size());
  std::set<int> seen;
  double coherent = 0.0;
  for (int j : pure_los_set) {
    if (j < 0 || j >= n) throw InvalidArgument("case3_rate: pure-LoS index out of range");
    if (!seen.insert(j).second) throw InvalidArgument("case3_rate: duplicate pure-LoS index");
    coherent += std::sqrt(user_gain[static_cast<std::size_t>(j)] * bs_gain[static_cast<std::size_t>(j)]);
  }
  double diffuse = 0.0;
  for (int i = 0; i < n; ++i) diffuse += user_gain[static_cast<std::size_t>(i)] * bs_gain[static_cast<std::size_t>(i)];

  const double l = elements_per_irs;
  const double mset = static_cast<double>(pure_los_set.size());
  HybridRate out;
  out.rate = rate_from_gain(1.0 + l * l * coherent * coherent + l * diffuse, transmit_power, noise_variance);
  out.bound = rate_from_gain(1.0 + l * l * mset * mset + l * n, transmit_power, noise_variance);
  return out;
}

LosLimitDiagnostic los_limit_diagnostic(std::span<const double> user_gain, std::span<const double> bs_gain,
                                        int elements_per_irs, double transmit_power, double noise_variance) {
  require_gains(user_gain, bs_gain, elements_per_irs, noise_variance, "los_limit_diagnostic");
  IrsGains g;
  g.user_gain.assign(user_gain.begin(), user_gain.end());
  g.bs_gain.assign(bs_gain.begin(), bs_gain.end());
  g.bs_k.assign(user_gain.size(), RicianFactor::pure_los());
  g.user_k.assign(user_gain.size(), RicianFactor::pure_los());

  LosLimitDiagnostic d;
  d.limit_rate = lemma2_rate(g, elements_per_irs, transmit_power, noise_variance);
  d.published_rate = case1_rate(user_gain, bs_gain, elements_per_irs, transmit_power, noise_variance);
  for (std::size_t i = 0; i < user_gain.size(); ++i) d.extra_term += user_gain[i] * bs_gain[i];
  d.extra_term *= elements_per_irs;
  d.rate_gap = d.published_rate - d.limit_rate;
  return d;
}

}  // namespace irs
