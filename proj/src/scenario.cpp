#include "irs/scenario.hpp"

#include <cmath>
#include <string>

#include "irs/errors.hpp"

namespace irs {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

void SystemConfig::validate() const {
  require(antennas >= 1, "M must be >= 1");
  require(irs_count >= 1, "N must be >= 1");
  require(elements_per_irs >= 1, "L must be >= 1");
  require(transmit_power > 0.0 && std::isfinite(transmit_power), "P must be > 0");
  require(noise_variance > 0.0 && std::isfinite(noise_variance), "sigma2 must be > 0");
  require(training_length >= 0, "T must be >= 0");
  require(training_snr >= 0.0 && std::isfinite(training_snr), "rho must be >= 0");
  require(wavelength > 0.0 && std::isfinite(wavelength), "lambda must be > 0");
  require(reference_pathloss > 0.0, "C0 must be > 0");
  require(reference_distance > 0.0, "D0 must be > 0");
  require(std::isfinite(pathloss_exponent), "alpha_exp must be finite");
  require(correlation >= 0.0 && correlation < 1.0, "corr_r must lie in [0, 1)");
  require(trials >= 1, "trials must be >= 1");
  require(min_link_distance > 0.0, "d_min must be > 0");
  require(max_bs_irs_distance >= min_link_distance, "d1_max must be >= d_min");
  require(max_irs_user_distance >= min_link_distance, "d2_max must be >= d_min");
}

RicianFactor::RicianFactor(double k) : k_(k) {
  if (!(k >= 0.0) || std::isinf(k))
    throw InvalidArgument("RicianFactor: K must be finite and >= 0 (use pure_los() for the LoS limit)");
}

double pathloss(double distance_m, const SystemConfig& cfg) {
  if (!(distance_m > 0.0)) throw InvalidArgument("pathloss: distance must be > 0");
  return cfg.reference_pathloss *
         std::pow(distance_m / cfg.reference_distance, -cfg.pathloss_exponent);
}

double rician_k(double distance_m) {
  if (!(distance_m >= 0.0)) throw InvalidArgument("rician_k: distance must be >= 0");
  return std::pow(10.0, 1.3 - 0.003 * distance_m);
}

CMatrix los_matrix(std::span<const Point> irs_elements, std::span<const Point> bs_antennas,
                   double wavelength) {
  if (!(wavelength > 0.0)) throw InvalidArgument("los_matrix: wavelength must be > 0");
  CMatrix out(static_cast<Eigen::Index>(irs_elements.size()),
              static_cast<Eigen::Index>(bs_antennas.size()));
  for (std::size_t i = 0; i < irs_elements.size(); ++i) {
    for (std::size_t j = 0; j < bs_antennas.size(); ++j) {
      const double phase = -2.0 * kPi * distance(irs_elements[i], bs_antennas[j]) / wavelength;
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = std::polar(1.0, phase);
    }
  }
  return out;
}

CVector los_vector(std::span<const Point> irs_elements, Point user, double wavelength) {
  const Point users[] = {user};
  return los_matrix(irs_elements, users, wavelength).col(0);
}

CMatrix correlation_block(int size, double corr) {
  if (size < 1) throw InvalidArgument("correlation_block: size must be >= 1");
  if (!(corr >= 0.0 && corr < 1.0)) throw InvalidArgument("correlation_block: corr_r must lie in [0, 1)");
  CMatrix r(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) r(i, j) = std::pow(corr, std::abs(i - j));
  return r;
}

Point centroid(std::span<const Point> points) {
  if (points.empty()) throw InvalidArgument("centroid: empty point set");
  Point c;
  for (const Point& p : points) {
    c.x += p.x;
    c.y += p.y;
  }
  c.x /= static_cast<double>(points.size());
  c.y /= static_cast<double>(points.size());
  return c;
}

std::vector<Point> uniform_linear_array(Point center, int count, double spacing) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    out.push_back({center.x, center.y + (i - 0.5 * (count - 1)) * spacing});
  return out;
}

DeploymentGeometry sample_geometry(const SystemConfig& cfg, Rng& rng) {
  cfg.validate();
  DeploymentGeometry geo;
  geo.user = cfg.user_position;
  geo.bs_antennas = uniform_linear_array({0.0, 0.0}, cfg.antennas, 0.5 * cfg.wavelength);
  const Point bs = centroid(geo.bs_antennas);

  constexpr int kMaxAttempts = 1'000'000;
  for (int n = 0; n < cfg.irs_count; ++n) {
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt == kMaxAttempts)
        throw ConfigError("user position leaves no admissible IRS location (check d1_max, d2_max, d_min)");
      const double radius = cfg.max_bs_irs_distance * std::sqrt(rng.uniform());
      const double angle = rng.uniform(0.0, 2.0 * kPi);
      const Point p{bs.x + radius * std::cos(angle), bs.y + radius * std::sin(angle)};
      const double d1 = distance(p, bs);
      const double d2 = distance(p, geo.user);
      if (d1 < cfg.min_link_distance || d1 > cfg.max_bs_irs_distance) continue;
      if (d2 < cfg.min_link_distance || d2 > cfg.max_irs_user_distance) continue;
      geo.irs_elements.push_back(uniform_linear_array(p, cfg.elements_per_irs, 0.5 * cfg.wavelength));
      break;
    }
  }
  return geo;
}

ChannelStatistics assemble_statistics(std::span<const IrsBlock> blocks, double corr) {
  if (blocks.empty()) throw StructuralError("assemble_statistics: no IRS blocks");
  const Eigen::Index l = blocks.front().los_bs_irs.rows();
  const Eigen::Index m = blocks.front().los_bs_irs.cols();
  if (l < 1 || m < 1) throw StructuralError("assemble_statistics: empty LoS block");
  for (const IrsBlock& b : blocks) {
    if (b.los_bs_irs.rows() != l || b.los_bs_irs.cols() != m || b.los_irs_user.size() != l)
      throw StructuralError("assemble_statistics: IRS blocks disagree in shape");
    if (!(b.link.bs_gain >= 0.0) || !(b.link.user_gain >= 0.0))
      throw InvalidArgument("assemble_statistics: large-scale gains must be >= 0");
  }

  ChannelStatistics s;
  s.antennas = static_cast<int>(m);
  s.irs_count = static_cast<int>(blocks.size());
  s.elements_per_irs = static_cast<int>(l);
  const Eigen::Index nl = l * static_cast<Eigen::Index>(blocks.size());

  s.los_bs_irs.resize(nl, m);
  s.los_irs_user.resize(nl);
  s.mean_bs_irs.resize(nl, m);
  s.mean_irs_user.resize(nl);
  s.nlos_bs_irs.resize(nl);
  s.nlos_irs_user.resize(nl);
  s.correlation = CMatrix::Zero(nl, nl);
  const CMatrix block_corr = correlation_block(static_cast<int>(l), corr);

  for (std::size_t n = 0; n < blocks.size(); ++n) {
    const IrsBlock& b = blocks[n];
    const IrsLink& k = b.link;
    const Eigen::Index row = static_cast<Eigen::Index>(n) * l;
    s.links.push_back(k);

    s.los_bs_irs.middleRows(row, l) = b.los_bs_irs;
    s.los_irs_user.segment(row, l) = b.los_irs_user;
    s.mean_bs_irs.middleRows(row, l) = std::sqrt(k.bs_gain * k.bs_k.los_fraction()) * b.los_bs_irs;
    s.mean_irs_user.segment(row, l) =
        std::sqrt(k.user_gain * k.user_k.los_fraction()) * b.los_irs_user.conjugate();
    s.nlos_bs_irs.segment(row, l).setConstant(std::sqrt(k.bs_gain * k.bs_k.nlos_fraction()));
    s.nlos_irs_user.segment(row, l).setConstant(std::sqrt(k.user_gain * k.user_k.nlos_fraction()));
    s.correlation.block(row, row, l, l) = block_corr;
  }
  return s;
}

ChannelStatistics build_statistics(const SystemConfig& cfg, const DeploymentGeometry& geometry) {
  cfg.validate();
  if (geometry.bs_antennas.size() != static_cast<std::size_t>(cfg.antennas))
    throw StructuralError("build_statistics: geometry has " + std::to_string(geometry.bs_antennas.size()) +
                          " BS antennas, config says M = " + std::to_string(cfg.antennas));
  if (geometry.irs_elements.size() != static_cast<std::size_t>(cfg.irs_count))
    throw StructuralError("build_statistics: geometry has " + std::to_string(geometry.irs_elements.size()) +
                          " IRSs, config says N = " + std::to_string(cfg.irs_count));

  const Point bs = centroid(geometry.bs_antennas);
  std::vector<IrsBlock> blocks;
  blocks.reserve(geometry.irs_elements.size());
  for (const auto& elements : geometry.irs_elements) {
    if (elements.size() != static_cast<std::size_t>(cfg.elements_per_irs))
      throw StructuralError("build_statistics: IRS element count differs from L");
    const Point c = centroid(elements);
    IrsBlock b;
    b.link.bs_distance = distance(c, bs);
    b.link.user_distance = distance(c, geometry.user);
    b.link.bs_gain = pathloss(b.link.bs_distance, cfg);
    b.link.user_gain = pathloss(b.link.user_distance, cfg);
    b.link.bs_k = cfg.pure_los_bs_irs ? RicianFactor::pure_los() : RicianFactor(rician_k(b.link.bs_distance));
    b.link.user_k =
        cfg.pure_los_irs_user ? RicianFactor::pure_los() : RicianFactor(rician_k(b.link.user_distance));
    b.los_bs_irs = los_matrix(elements, geometry.bs_antennas, cfg.wavelength);
    b.los_irs_user = los_vector(elements, geometry.user, cfg.wavelength);
    blocks.push_back(std::move(b));
  }
  return assemble_statistics(blocks, cfg.correlation);
}

}  // namespace irs
