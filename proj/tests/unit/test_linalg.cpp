#include "doctest.h"

#include <random>

#include "irs/errors.hpp"
#include "irs/linalg.hpp"
#include "irs/rng.hpp"

using namespace irs;

TEST_SUITE("linalg") {

TEST_CASE("sqrt of identity and diagonal matrices") {
  CHECK((matrix_sqrt_psd(CMatrix::Identity(3, 3)) - CMatrix::Identity(3, 3)).norm() < 1e-14);
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  const CMatrix s = matrix_sqrt_psd(d);
  CHECK(std::abs(s(0, 0) - 2.0) < 1e-14);
  CHECK(std::abs(s(1, 1) - 3.0) < 1e-14);
  CHECK(std::abs(s(0, 1)) < 1e-14);
}

TEST_CASE("sqrt reconstructs a correlated block") {
  CMatrix a(2, 2);
  a << 1.0, 0.5, 0.5, 1.0;
  const CMatrix s = matrix_sqrt_psd(a);
  CHECK((s * s - a).norm() / a.norm() < 1e-8);
  CHECK(hermitian_defect(s) < 1e-14);
  CHECK(min_eigenvalue(s) >= 0.0);
}

TEST_CASE("sqrt of random PSD matrices, including rank deficient") {
  std::mt19937_64 gen(5);
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix b = rng.complex_normal_matrix(6, 1 + trial % 6);
    const CMatrix a = b * b.adjoint();
    const CMatrix s = matrix_sqrt_psd(a);
    CHECK((s * s - a).norm() / a.norm() < 1e-8);
  }
}

TEST_CASE("sqrt rejects non-Hermitian and indefinite input") {
  CMatrix a(2, 2);
  a << 1.0, 1.0, 0.0, 1.0;
  CHECK_THROWS_AS(matrix_sqrt_psd(a), InvalidArgument);
  CMatrix b(2, 2);
  b << 1.0, 0.0, 0.0, -1.0;
  CHECK_THROWS_AS(matrix_sqrt_psd(b), InvalidArgument);
  CHECK_THROWS_AS(matrix_sqrt_psd(CMatrix::Zero(2, 3)), StructuralError);
}

TEST_CASE("tiny negative eigenvalues are clamped") {
  CMatrix a = CMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = -1e-13;
  const CMatrix s = matrix_sqrt_psd(a);
  CHECK(std::abs(s(1, 1)) < 1e-12);
}

TEST_CASE("inverse sqrt") {
  Rng rng(3);
  const CMatrix b = rng.complex_normal_matrix(5, 5);
  const CMatrix a = b * b.adjoint() + CMatrix::Identity(5, 5);
  const CMatrix s = matrix_inv_sqrt_pd(a);
  CHECK((s * a * s - CMatrix::Identity(5, 5)).norm() < 1e-10);
  CMatrix z = CMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  CHECK_THROWS_AS(matrix_inv_sqrt_pd(z), InvalidArgument);
}

}  // TEST_SUITE
