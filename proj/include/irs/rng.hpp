#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "irs/linalg.hpp"

namespace irs {

// SplitMix64 finalizer. Used for every seed derivation in the project.
std::uint64_t mix64(std::uint64_t x);

// Derives the seed of stream `index` under `seed`. Streams for different
// indices are statistically independent, so trial t can be regenerated on its
// own regardless of how trials are scheduled.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

// Stable 64-bit hash of (seed, label); scenario seeds are derived this way.
std::uint64_t label_seed(std::uint64_t seed, std::string_view label);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(stream_seed(seed, index));
  }

  double uniform() { return uniform_(engine_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double standard_normal() { return normal_(engine_); }

  // CN(0, variance): real and imaginary parts each carry variance/2.
  Complex complex_normal(double variance = 1.0);
  CMatrix complex_normal_matrix(Eigen::Index rows, Eigen::Index cols, double variance = 1.0);
  CVector complex_normal_vector(Eigen::Index size, double variance = 1.0);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace irs
