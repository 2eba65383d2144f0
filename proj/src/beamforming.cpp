#include "irs/beamforming.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "irs/errors.hpp"

namespace irs {

namespace {

// Unit norm, first non-negligible entry real positive.
CVector align_first(CVector x) {
  x /= x.norm();
  const double floor = 1e-8 * x.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (std::abs(x(i)) > floor) {
      x *= std::conj(x(i)) / std::abs(x(i));
      break;
    }
  }
  return x;
}

bool proportional(const CMatrix& q, const CMatrix& j) {
  if (q.rows() != j.rows() || q.cols() != j.cols() || q.size() == 0) return false;
  const double jn = j.squaredNorm();
  if (!(jn > 0.0)) return false;
  const Complex c = (j.adjoint() * q).trace() / jn;
  return (q - c * j).norm() <= 1e-12 * q.norm();
}

}  // namespace

CVector mrt_vector(const CVector& direct_hat, const CMatrix& cascade_hat, const ReflectionVector& v) {
  if (cascade_hat.cols() != direct_hat.size() || cascade_hat.rows() != v.size())
    throw StructuralError("mrt_vector: dimension mismatch");
  CVector combined = direct_hat + cascade_hat.adjoint() * v.values();
  const double norm = combined.norm();
  if (!(norm > 0.0)) throw DegenerateChannel("mrt_vector: combined channel estimate is zero");
  return combined / norm;
}

CVector dominant_eigenvector(const CMatrix& b, const EigenOptions& options) {
  if (b.rows() != b.cols() || b.rows() == 0) throw StructuralError("dominant_eigenvector: matrix must be square");
  const Eigen::Index n = b.rows();

  if (options.method == EigenMethod::dense) {
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(b);
    if (eig.info() != Eigen::Success) throw ConvergenceError("dominant_eigenvector: eigendecomposition failed");
    return eig.eigenvectors().col(n - 1);
  }

  double shift = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double off = b.row(i).cwiseAbs().sum() - std::abs(b(i, i));
    shift = std::min(shift, b(i, i).real() - off);
  }
  shift = std::max(shift, 0.0);
  CMatrix a = b;
  a.diagonal().array() -= shift;

  // Start from the column with the largest norm: it has a nonzero component
  // along the dominant eigenvector unless the shifted matrix vanishes.
  Eigen::Index start = 0;
  a.colwise().squaredNorm().maxCoeff(&start);
  CVector x = a.col(start);
  double xn = x.norm();
  if (!(xn > 0.0)) {
    // Shifted matrix is zero: B is a multiple of I and every vector is dominant.
    return CVector::Unit(n, 0);
  }
  x /= xn;

  for (int it = 0; it < options.max_iterations; ++it) {
    CVector y = a * x;
    const double yn = y.norm();
    if (!(yn > 0.0)) return x;
    y /= yn;
    const Complex overlap = x.dot(y);  // x^H y
    if (std::abs(overlap) > 0.0) y *= std::conj(overlap) / std::abs(overlap);
    const double change = (y - x).norm();
    x = std::move(y);
    if (change < options.tolerance) return x;
  }
  throw ConvergenceError("dominant_eigenvector: no convergence after " + std::to_string(options.max_iterations) +
                         " iterations");
}

CVector solve_statistical_reflection(const StatMatrices& sm, const EigenOptions& options) {
  if (proportional(sm.q, sm.signal)) {
    // Q = c J (perfect CSI): B = I / c fixes no direction. With |v|^2 = NL
    // the objective reduces to v^H J v / c, maximized by the top eigenvector of J.
    if (!(min_eigenvalue(sm.q) > 0.0)) throw InvalidArgument("solve_statistical_reflection: Q must be positive definite");
    const CMatrix j = 0.5 * (sm.signal + sm.signal.adjoint());
    return align_first(dominant_eigenvector(j, options));
  }
  const CMatrix q_inv_sqrt = matrix_inv_sqrt_pd(sm.q);
  CMatrix b = q_inv_sqrt * sm.signal * q_inv_sqrt;
  b = 0.5 * (b + b.adjoint());
  const CVector w = dominant_eigenvector(b, options);

  return align_first(q_inv_sqrt * w);
}

ReflectionVector phase_extract(const CVector& relaxed) {
  CVector v(relaxed.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = std::abs(relaxed(i)) < 1e-12 ? Complex(1.0, 0.0) : std::polar(1.0, std::arg(relaxed(i)));
  return ReflectionVector(std::move(v));
}

ReflectionVector statistical_reflection(const StatMatrices& sm, const EigenOptions& options) {
  return phase_extract(solve_statistical_reflection(sm, options));
}

ReflectionVector random_reflection(Eigen::Index total_elements, Rng& rng) {
  if (total_elements < 1) throw InvalidArgument("random_reflection: NL must be >= 1");
  CVector v(total_elements);
  for (Eigen::Index i = 0; i < total_elements; ++i) v(i) = std::polar(1.0, rng.uniform(0.0, 2.0 * kPi));
  return ReflectionVector(std::move(v));
}

ReflectionVector siso_optimal_phases(const ChannelStatistics& stats) {
  if (stats.antennas != 1) throw InvalidArgument("siso_optimal_phases: requires M = 1");
  const Eigen::Index nl = stats.total_elements();
  if (stats.los_bs_irs.rows() != nl || stats.los_irs_user.size() != nl)
    throw StructuralError("siso_optimal_phases: LoS factors have the wrong length");
  RVector phi(nl);
  for (Eigen::Index i = 0; i < nl; ++i) {
    const double theta_h = std::arg(stats.los_bs_irs(i, 0));
    const double theta_g = std::arg(std::conj(stats.los_irs_user(i)));
    phi(i) = -(theta_g + theta_h);
  }
  return ReflectionVector::from_phase_shifts(phi);
}

}  // namespace irs
