#include "irs/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "irs/errors.hpp"

namespace irs {

namespace {

void require_square(const CMatrix& a, const char* what) {
  if (a.rows() != a.cols()) throw StructuralError(std::string(what) + ": matrix is not square");
}

}  // namespace

double hermitian_defect(const CMatrix& a) {
  require_square(a, "hermitian_defect");
  if (a.size() == 0) return 0.0;
  const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);
  return (a - a.adjoint()).cwiseAbs().maxCoeff() / scale;
}

double min_eigenvalue(const CMatrix& a) {
  require_square(a, "min_eigenvalue");
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(a, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

CMatrix matrix_sqrt_psd(const CMatrix& a) {
  require_square(a, "matrix_sqrt_psd");
  if (hermitian_defect(a) > 1e-10) throw InvalidArgument("matrix_sqrt_psd: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(a);
  if (eig.info() != Eigen::Success) throw ConvergenceError("matrix_sqrt_psd: eigendecomposition failed");
  RVector lambda = eig.eigenvalues();
  const double radius = std::max(lambda.cwiseAbs().maxCoeff(), 1.0);
  if (lambda.minCoeff() < -1e-10 * radius)
    throw InvalidArgument("matrix_sqrt_psd: input has a negative eigenvalue");
  lambda = lambda.cwiseMax(0.0).cwiseSqrt();
  const CMatrix& u = eig.eigenvectors();
  CMatrix s = u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
  return 0.5 * (s + s.adjoint());
}

CMatrix matrix_inv_sqrt_pd(const CMatrix& a) {
  require_square(a, "matrix_inv_sqrt_pd");
  if (hermitian_defect(a) > 1e-10) throw InvalidArgument("matrix_inv_sqrt_pd: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(a);
  if (eig.info() != Eigen::Success) throw ConvergenceError("matrix_inv_sqrt_pd: eigendecomposition failed");
  const RVector& lambda = eig.eigenvalues();
  if (lambda.minCoeff() <= 0.0) throw InvalidArgument("matrix_inv_sqrt_pd: input is not positive definite");
  const CMatrix& u = eig.eigenvectors();
  CMatrix s = u * lambda.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() * u.adjoint();
  return 0.5 * (s + s.adjoint());
}

}  // namespace irs
