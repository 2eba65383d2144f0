#pragma once

// Instance generators shared by the unit and acceptance tests.

#include <cmath>
#include <random>
#include <vector>

#include "irs/analysis.hpp"
#include "irs/linalg.hpp"
#include "irs/scenario.hpp"

namespace irs::testing {

inline CVector random_phases(std::mt19937_64& gen, Eigen::Index n) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = std::polar(1.0, u(gen));
  return v;
}

inline CMatrix random_phase_matrix(std::mt19937_64& gen, Eigen::Index rows, Eigen::Index cols) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = std::polar(1.0, u(gen));
  return m;
}

struct BlockDraw {
  double gain_lo = 0.1;
  double gain_hi = 1.0;
  double k_max = 20.0;
  double pure_los_probability = 0.2;
};

// Random per-IRS statistics with unit-modulus LoS factors of random phase.
inline std::vector<IrsBlock> random_blocks(std::mt19937_64& gen, int n, int l, int m, const BlockDraw& d = {}) {
  std::uniform_real_distribution<double> gain(d.gain_lo, d.gain_hi);
  std::uniform_real_distribution<double> kdist(0.0, d.k_max);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  auto factor = [&] {
    if (coin(gen) < d.pure_los_probability) return RicianFactor::pure_los();
    return RicianFactor(kdist(gen));
  };
  std::vector<IrsBlock> blocks(static_cast<std::size_t>(n));
  for (auto& b : blocks) {
    b.link.user_gain = gain(gen);
    b.link.bs_gain = gain(gen);
    b.link.bs_k = factor();
    b.link.user_k = factor();
    b.los_bs_irs = random_phase_matrix(gen, l, m);
    b.los_irs_user = random_phases(gen, l);
  }
  return blocks;
}

// Blocks with every LoS factor equal to 1.
inline std::vector<IrsBlock> aligned_blocks(int n, int l, int m, double alpha, double beta, RicianFactor k1,
                                            RicianFactor k2) {
  std::vector<IrsBlock> blocks(static_cast<std::size_t>(n));
  for (auto& b : blocks) {
    b.link.user_gain = alpha;
    b.link.bs_gain = beta;
    b.link.bs_k = k1;
    b.link.user_k = k2;
    b.los_bs_irs = CMatrix::Ones(l, m);
    b.los_irs_user = CVector::Ones(l);
  }
  return blocks;
}

// NL = 4 statistical instance used for solver-quality checks.
struct SolverInstance {
  ChannelStatistics stats;
  StatMatrices matrices;
  double transmit_power = 100.0;
};

inline SolverInstance random_solver_instance(std::mt19937_64& gen) {
  static constexpr int kSplits[] = {1, 2, 4};
  static constexpr int kAntennas[] = {1, 2, 4, 9};
  static constexpr double kXi[] = {0.0, 0.01, 0.1};
  std::uniform_int_distribution<int> pick3(0, 2);
  std::uniform_int_distribution<int> pick4(0, 3);
  std::uniform_real_distribution<double> corr(0.0, 0.9);
  const int n = kSplits[pick3(gen)];
  const int m = kAntennas[pick4(gen)];
  const double xi = kXi[pick3(gen)];
  const double r = corr(gen);
  SolverInstance inst;
  const auto blocks = random_blocks(gen, n, 4 / n, m);
  inst.stats = assemble_statistics(blocks, r);
  inst.matrices = build_jq(inst.stats, 1.0, xi);
  return inst;
}

}  // namespace irs::testing
