#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "irs/linalg.hpp"
#include "irs/reflection.hpp"
#include "irs/scenario.hpp"

namespace irs {

// Which closed form to use for the error-power (denominator) expectation
// E{|(e_d^H + v^H E_Z)(h_d^ + Z^^H v)|^2}.
//
// `exact` adds the cross term 2 xi^2 M^2 NL between E{e_d^H h_d^ ...} and
// E{v^H E_Z Z^^H v ...}; both terms contain a fourth moment of the errors and
// they are correlated, so the cross term does not vanish. `published` omits it.
enum class ErrorPowerModel { exact, published };

// C = Gbar Hbar Hbar^H Gbar^H + M Gbar K1 R K1 Gbar^H
//     + [tr(K2 Hbar Hbar^H K2) + M tr(K2 K1 R K1 K2)] / NL * I.
//
// For unit-modulus v, v^H C v = v^H E{Z Z^H} v.
CMatrix build_c(const ChannelStatistics& stats);

// The quadratic forms behind the rate approximation. For unit-modulus v:
//   v^H signal v = E{||h_d^^H + v^H Z^||^2}                         (X)
//   v^H error  v = E{|(e_d^H + v^H E_Z)(h_d^ + Z^^H v)|^2}           (Y)
//   v^H q v      = sigma2 X + Y
// Scalar terms are folded onto (s / NL) I so the sandwich reproduces them.
struct StatMatrices {
  CMatrix c;
  CMatrix signal;  // J_eff
  CMatrix error;   // Y part of Q_eff
  CMatrix q;       // Q_eff = sigma2 J_eff + error

  double gamma1 = 0.0;  // (1 + xi) M
  double gamma2 = 0.0;  // xi M + xi^2 M (M + 1)
  double gamma3 = 0.0;  // gamma1 + xi M + xi (M + 1) M NL
  double gamma4 = 0.0;  // xi (1 + NL)
  double cross_term = 0.0;  // 2 xi^2 M^2 NL, zero under the published model
  double xi = 0.0;
  int antennas = 0;
  int total_elements = 0;
  double noise_variance = 0.0;
  ErrorPowerModel model = ErrorPowerModel::exact;

  double signal_form(const CVector& v) const;
  double error_form(const CVector& v) const;
  double q_form(const CVector& v) const;
};

StatMatrices build_jq(const ChannelStatistics& stats, double noise_variance, double xi,
                      ErrorPowerModel model = ErrorPowerModel::exact);

// log2(1 + P X^2 / (sigma2 X + Y)) evaluated at v.
double theorem1_rate(const ReflectionVector& v, const StatMatrices& sm, double transmit_power);

// SNR inside the log of theorem1_rate. Accepts any nonzero v (no modulus check).
double statistical_snr(const CVector& v, const StatMatrices& sm, double transmit_power);

// Per-IRS statistics for the M = 1, perfect-CSI, uncorrelated closed forms.
struct IrsGains {
  std::vector<double> user_gain;  // alpha_n
  std::vector<double> bs_gain;    // beta_n
  std::vector<RicianFactor> bs_k;
  std::vector<RicianFactor> user_k;

  static IrsGains from(const ChannelStatistics& stats);
  std::size_t size() const { return user_gain.size(); }
};

// 1 + Upsilon_1 argument of the M = 1 closed form:
//   Upsilon_1 = L^2 (sum_n sqrt(a b K1 K2 / ((K1+1)(K2+1))))^2
//             + L sum_n a b (K1 + K2 + 1) / ((K1+1)(K2+1)).
double lemma2_upsilon(const IrsGains& gains, int elements_per_irs);
double lemma2_rate(const IrsGains& gains, int elements_per_irs, double transmit_power, double noise_variance);

// Both links pure LoS, as published (keeps the L sum a b term).
double case1_rate(std::span<const double> user_gain, std::span<const double> bs_gain, int elements_per_irs,
                  double transmit_power, double noise_variance);

// Both links Rayleigh.
double case2_rate(std::span<const double> user_gain, std::span<const double> bs_gain, int elements_per_irs,
                  double transmit_power, double noise_variance);

// log2(1 + (P/sigma2)(1 + L N)): the normalized-gain ceiling of case 2.
double case2_bound(int irs_count, int elements_per_irs, double transmit_power, double noise_variance);

struct HybridRate {
  double rate = 0.0;
  double bound = 0.0;  // log2(1 + (P/sigma2)(1 + L^2 m^2 + L N)), m = |pure-LoS set|
};

HybridRate case3_rate(std::span<const double> user_gain, std::span<const double> bs_gain, int elements_per_irs,
                      std::span<const int> pure_los_set, double transmit_power, double noise_variance);

// The published both-LoS formula keeps L sum a b, while the limit of the general
// M = 1 expression as K1, K2 -> infinity drops it. This reports both sides.
struct LosLimitDiagnostic {
  double limit_rate = 0.0;      // lemma2_rate with pure-LoS factors
  double published_rate = 0.0;  // case1_rate
  double extra_term = 0.0;      // L sum_n a_n b_n
  double rate_gap = 0.0;        // published_rate - limit_rate
};

LosLimitDiagnostic los_limit_diagnostic(std::span<const double> user_gain, std::span<const double> bs_gain,
                                        int elements_per_irs, double transmit_power, double noise_variance);

inline double log2_1p(double x) { return std::log1p(x) / std::log(2.0); }

}  // namespace irs
