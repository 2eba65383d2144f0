#pragma once

#include <cstdint>
#include <span>
#include <variant>

#include "irs/analysis.hpp"
#include "irs/channel.hpp"
#include "irs/estimation.hpp"
#include "irs/reflection.hpp"
#include "irs/scenario.hpp"

namespace irs {

struct McEstimate {
  double mean_rate = 0.0;  // bits/s/Hz
  double std_error = 0.0;  // sample standard deviation / sqrt(trials)
  int trials = 0;
  std::uint64_t seed = 0;

  bool operator==(const McEstimate&) const = default;
};

// Per-draw SNR of the MRT downlink with imperfect CSI:
//   P |b^H f|^2 / (sigma2 + |a f|^2),
// with b^H = h_d^^H + v^H Z^ and a = e_d^H + v^H E_Z. For the MRT f this is
// P ||b||^2 / (sigma2 + |a b|^2 / ||b||^2).
double instantaneous_snr(const ChannelRealization& realization, const CsiEstimates& estimates,
                         const ReflectionVector& v, const CVector& f, double transmit_power,
                         double noise_variance);

// Draw a fresh uniform-phase v in every trial.
struct RandomPerTrial {};

using ReflectionPolicy = std::variant<ReflectionVector, RandomPerTrial>;

struct McSettings {
  double transmit_power = 100.0;
  double noise_variance = 1.0;
  double xi = 0.0;
  int trials = 1000;
  std::uint64_t seed = 1;
  int workers = 1;  // results do not depend on this
};

// Averages log2(1 + SNR) over independent (channel, error) draws. Trial t uses
// the stream Rng::stream(seed, t), so results depend only on (seed, trials).
McEstimate monte_carlo_rate(const ChannelStatistics& stats, const ReflectionPolicy& policy,
                            const McSettings& settings);

// Pairwise (fixed-tree) summation; the order of additions depends only on the
// length of `values`.
double pairwise_sum(std::span<const double> values);

// Exhaustive search over v_i = exp(j 2 pi k_i / levels), maximizing the
// statistical SNR. Tuples are visited lexicographically (k_0 most significant)
// and a later tuple replaces the incumbent only if it is better by more than a
// relative 1e-12, so ties go to the smallest tuple.
// Throws SearchSpaceTooLarge when levels^NL > 1e7.
ReflectionVector grid_search_reflection(const StatMatrices& sm, double transmit_power, int levels);

inline constexpr double kGridSearchBudget = 1e7;

}  // namespace irs
