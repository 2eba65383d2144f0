#include "irs/simulator.hpp"

#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "irs/beamforming.hpp"
#include "irs/errors.hpp"

namespace irs {

double instantaneous_snr(const ChannelRealization& realization, const CsiEstimates& estimates,
                         const ReflectionVector& v, const CVector& f, double transmit_power,
                         double noise_variance) {
  (void)realization;  // the estimate/error pair carries everything needed
  const CVector& vv = v.values();
  // Row vectors stored as columns: b = h_d^ + Z^^H v, a^H = e_d + E_Z^H v.
  const CVector b = estimates.direct_hat + estimates.cascade_hat.adjoint() * vv;
  if (!(b.squaredNorm() > 0.0)) throw DegenerateChannel("instantaneous_snr: combined channel estimate is zero");
  const CVector a_h = estimates.direct_error + estimates.cascade_error.adjoint() * vv;
  const double signal = std::norm(b.dot(f));     // |b^H f|^2
  const double leakage = std::norm(a_h.dot(f));  // |a f|^2
  return transmit_power * signal / (noise_variance + leakage);
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double x : values) s += x;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

McEstimate monte_carlo_rate(const ChannelStatistics& stats, const ReflectionPolicy& policy,
                            const McSettings& settings) {
  if (settings.trials < 1) throw InvalidArgument("monte_carlo_rate: trials must be >= 1");
  if (!(settings.noise_variance > 0.0)) throw InvalidArgument("monte_carlo_rate: sigma2 must be > 0");
  if (!(settings.xi >= 0.0)) throw InvalidArgument("monte_carlo_rate: xi must be >= 0");
  if (const auto* fixed = std::get_if<ReflectionVector>(&policy);
      fixed && fixed->size() != stats.total_elements())
    throw StructuralError("monte_carlo_rate: reflection vector has the wrong length");

  const ChannelSampler sampler(stats);
  const auto trials = static_cast<std::size_t>(settings.trials);
  std::vector<double> rates(trials);

  auto run_trial = [&](std::size_t t) {
    Rng rng = Rng::stream(settings.seed, t);
    const ChannelRealization real = sampler.sample(rng);
    const CsiEstimates est = sample_estimates(real, settings.xi, rng);
    const ReflectionVector v = std::holds_alternative<ReflectionVector>(policy)
                                   ? std::get<ReflectionVector>(policy)
                                   : random_reflection(stats.total_elements(), rng);
    const CVector f = mrt_vector(est.direct_hat, est.cascade_hat, v);
    rates[t] = log2_1p(instantaneous_snr(real, est, v, f, settings.transmit_power, settings.noise_variance));
  };

  const std::size_t workers =
      std::min<std::size_t>(trials, static_cast<std::size_t>(std::max(1, settings.workers)));
  if (workers == 1) {
    for (std::size_t t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < trials; t += workers) run_trial(t);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }

  McEstimate out;
  out.trials = settings.trials;
  out.seed = settings.seed;
  out.mean_rate = pairwise_sum(rates) / static_cast<double>(trials);
  if (trials > 1) {
    std::vector<double> dev(trials);
    for (std::size_t t = 0; t < trials; ++t) dev[t] = (rates[t] - out.mean_rate) * (rates[t] - out.mean_rate);
    const double variance = pairwise_sum(dev) / static_cast<double>(trials - 1);
    out.std_error = std::sqrt(variance / static_cast<double>(trials));
  }
  return out;
}

ReflectionVector grid_search_reflection(const StatMatrices& sm, double transmit_power, int levels) {
  if (levels < 1) throw InvalidArgument("grid_search_reflection: levels must be >= 1");
  const int nl = sm.total_elements;
  if (nl * std::log(static_cast<double>(levels)) > std::log(kGridSearchBudget) + 1e-9)
    throw SearchSpaceTooLarge("grid_search_reflection: " + std::to_string(levels) + "^" + std::to_string(nl) +
                              " candidates exceed the 1e7 budget");

  std::vector<Complex> alphabet(static_cast<std::size_t>(levels));
  for (int k = 0; k < levels; ++k) alphabet[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * kPi * k / levels);

  std::vector<int> idx(static_cast<std::size_t>(nl), 0);
  CVector v(nl);
  for (int i = 0; i < nl; ++i) v(i) = alphabet[0];
  CVector best = v;
  double best_snr = statistical_snr(v, sm, transmit_power);

  for (;;) {
    // Odometer increment with the last element least significant.
    int pos = nl - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == levels - 1) {
      idx[static_cast<std::size_t>(pos)] = 0;
      v(pos) = alphabet[0];
      --pos;
    }
    if (pos < 0) break;
    v(pos) = alphabet[static_cast<std::size_t>(++idx[static_cast<std::size_t>(pos)])];

    const double snr = statistical_snr(v, sm, transmit_power);
    if (snr > best_snr * (1.0 + 1e-12)) {
      best_snr = snr;
      best = v;
    }
  }
  return ReflectionVector(best);
}

}  // namespace irs
