#pragma once

#include <complex>

#include <Eigen/Core>

namespace irs {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

// Largest |A - A^H| entry, relative to the largest |A| entry.
double hermitian_defect(const CMatrix& a);

// Smallest eigenvalue of a Hermitian matrix (dense decomposition).
double min_eigenvalue(const CMatrix& a);

// Returns S Hermitian PSD with S*S = A. Eigenvalues down to -1e-10 (relative to
// the spectral radius) are clamped to zero; non-Hermitian input throws.
CMatrix matrix_sqrt_psd(const CMatrix& a);

// Inverse square root of a Hermitian positive definite matrix.
CMatrix matrix_inv_sqrt_pd(const CMatrix& a);

}  // namespace irs
