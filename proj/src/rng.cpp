#include "irs/rng.hpp"

#include <cmath>

namespace irs {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

std::uint64_t label_seed(std::uint64_t seed, std::string_view label) {
  // FNV-1a over the label, then mixed with the seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return stream_seed(seed, h);
}

Complex Rng::complex_normal(double variance) {
  const double s = std::sqrt(0.5 * variance);
  const double re = standard_normal();
  const double im = standard_normal();
  return {s * re, s * im};
}

CMatrix Rng::complex_normal_matrix(Eigen::Index rows, Eigen::Index cols, double variance) {
  CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = complex_normal(variance);
  return m;
}

CVector Rng::complex_normal_vector(Eigen::Index size, double variance) {
  CVector v(size);
  for (Eigen::Index i = 0; i < size; ++i) v(i) = complex_normal(variance);
  return v;
}

}  // namespace irs
