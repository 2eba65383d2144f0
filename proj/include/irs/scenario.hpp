#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "irs/linalg.hpp"
#include "irs/rng.hpp"

namespace irs {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point a, Point b);

// Scalar parameters of one downlink scenario. Defaults are the reference
// simulation setup: 9 antennas, 4 IRSs of 16 elements, P = 20 dB, noise 0 dB,
// 10 training symbols at 20 dB, C0 = 1e-3 at 1 m with exponent 2.5.
struct SystemConfig {
  int antennas = 9;                  // M
  int irs_count = 4;                 // N
  int elements_per_irs = 16;         // L
  double transmit_power = 100.0;     // P, linear
  double noise_variance = 1.0;       // sigma2, linear
  int training_length = 10;          // T
  double training_snr = 100.0;       // rho, linear
  double wavelength = 0.1;           // lambda, meters
  double reference_pathloss = 1e-3;  // C0
  double reference_distance = 1.0;   // D0, meters
  double pathloss_exponent = 2.5;    // alpha_exp
  double correlation = 0.0;          // corr_r in [0, 1)
  std::uint64_t seed = 1;
  int trials = 1000;

  bool perfect_csi = false;
  bool pure_los_bs_irs = false;    // K1 = infinity on every IRS
  bool pure_los_irs_user = false;  // K2 = infinity on every IRS

  // Deployment sampler.
  Point user_position{15.0, 0.0};
  double max_bs_irs_distance = 10.0;
  double max_irs_user_distance = 20.0;
  double min_link_distance = 1.0;

  int total_elements() const { return irs_count * elements_per_irs; }

  // Throws ConfigError naming the offending key.
  void validate() const;
};

// Rician K-factor with an exact pure-LoS state. The weights used by the channel
// model are K/(K+1) on the LoS part and 1/(K+1) on the scattered part; in the
// pure-LoS state they are exactly 1 and 0.
class RicianFactor {
 public:
  RicianFactor() = default;
  explicit RicianFactor(double k);
  static RicianFactor pure_los() {
    RicianFactor f;
    f.k_ = std::numeric_limits<double>::infinity();
    return f;
  }

  bool is_pure_los() const { return k_ == std::numeric_limits<double>::infinity(); }
  double value() const { return k_; }
  double los_fraction() const { return is_pure_los() ? 1.0 : k_ / (k_ + 1.0); }
  double nlos_fraction() const { return is_pure_los() ? 0.0 : 1.0 / (k_ + 1.0); }

 private:
  double k_ = 0.0;
};

double pathloss(double distance_m, const SystemConfig& cfg);

// 10^(1.3 - 0.003 d).
double rician_k(double distance_m);

// Entry (i, j) = exp(-j 2 pi |element_i - antenna_j| / lambda).
CMatrix los_matrix(std::span<const Point> irs_elements, std::span<const Point> bs_antennas,
                   double wavelength);
CVector los_vector(std::span<const Point> irs_elements, Point user, double wavelength);

// Exponential correlation: entry (i, j) = r^|i-j|.
CMatrix correlation_block(int size, double corr);

struct DeploymentGeometry {
  std::vector<Point> bs_antennas;
  std::vector<std::vector<Point>> irs_elements;
  Point user;
};

Point centroid(std::span<const Point> points);

// `count` points spaced `spacing` apart along the y axis, centered on `center`.
std::vector<Point> uniform_linear_array(Point center, int count, double spacing);

// BS half-wavelength ULA at the origin; each IRS a half-wavelength ULA centered
// on a point drawn uniformly from the disk of radius max_bs_irs_distance around
// the BS, accepted when both link distances fall inside
// [min_link_distance, max_*_distance].
DeploymentGeometry sample_geometry(const SystemConfig& cfg, Rng& rng);

struct IrsLink {
  double bs_gain = 1.0;    // beta_n
  double user_gain = 1.0;  // alpha_n
  RicianFactor bs_k;       // K_{1,n}
  RicianFactor user_k;     // K_{2,n}
  double bs_distance = 0.0;
  double user_distance = 0.0;
};

// Everything known about one IRS before stacking.
struct IrsBlock {
  IrsLink link;
  CMatrix los_bs_irs;    // L x M, unit modulus
  CVector los_irs_user;  // L, unit modulus
};

// Stacked statistical description of the BS -> IRSs -> user channel.
//
// The IRS -> user channel is kept in diagonal form: mean_irs_user holds the
// diagonal of Gbar = blkdiag(sqrt(a K2/(K2+1)) diag(conj(g_n))), so that
// v^H Gbar Hbar equals the sum over IRSs of g_n^H Phi_n H_n.
struct ChannelStatistics {
  int antennas = 0;
  int irs_count = 0;
  int elements_per_irs = 0;
  std::vector<IrsLink> links;

  CMatrix los_bs_irs;    // unweighted LoS factors, NL x M
  CVector los_irs_user;  // unweighted LoS factors, NL
  CMatrix mean_bs_irs;   // Hbar, NL x M
  CVector mean_irs_user; // diagonal of Gbar
  RVector nlos_bs_irs;   // diagonal of K1
  RVector nlos_irs_user; // diagonal of K2
  CMatrix correlation;   // R, block diagonal

  int total_elements() const { return irs_count * elements_per_irs; }
  CMatrix mean_irs_user_matrix() const { return mean_irs_user.asDiagonal(); }
};

ChannelStatistics assemble_statistics(std::span<const IrsBlock> blocks, double corr);

ChannelStatistics build_statistics(const SystemConfig& cfg, const DeploymentGeometry& geometry);

}  // namespace irs
