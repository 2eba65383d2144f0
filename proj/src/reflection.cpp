#include "irs/reflection.hpp"

#include <cmath>

#include "irs/errors.hpp"

namespace irs {

ReflectionVector::ReflectionVector(CVector values) : values_(std::move(values)) {
  if (!is_unit_modulus(values_)) throw InvalidArgument("ReflectionVector: entries must have unit modulus");
}

ReflectionVector ReflectionVector::from_phase_shifts(const RVector& phase_shifts) {
  CVector v(phase_shifts.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = std::polar(1.0, -phase_shifts(i));
  return ReflectionVector(std::move(v));
}

RVector ReflectionVector::phase_shifts() const {
  RVector phi(values_.size());
  for (Eigen::Index i = 0; i < phi.size(); ++i) {
    double p = -std::arg(values_(i));
    if (p < 0.0) p += 2.0 * kPi;
    if (p >= 2.0 * kPi) p -= 2.0 * kPi;
    phi(i) = p;
  }
  return phi;
}

bool is_unit_modulus(const CVector& v, double tol) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(std::abs(v(i)) - 1.0) > tol) return false;
  return true;
}

}  // namespace irs
