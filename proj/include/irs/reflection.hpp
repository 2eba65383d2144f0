#pragma once

#include "irs/linalg.hpp"

namespace irs {

// Stacked IRS reflection coefficients v = [v_1; ...; v_N] with |v_i| = 1.
// The phase shift applied by element i is phi_i = -arg(v_i), since
// v_n = [e^{j phi_n1}, ...]^H.
class ReflectionVector {
 public:
  static constexpr double kModulusTolerance = 1e-9;

  ReflectionVector() = default;

  // Throws InvalidArgument unless every entry has unit modulus.
  explicit ReflectionVector(CVector values);

  // v_i = exp(-j phi_i).
  static ReflectionVector from_phase_shifts(const RVector& phase_shifts);

  const CVector& values() const { return values_; }
  Eigen::Index size() const { return values_.size(); }

  // phi_i in [0, 2 pi).
  RVector phase_shifts() const;

 private:
  CVector values_;
};

// True when every entry is within `tol` of unit modulus.
bool is_unit_modulus(const CVector& v, double tol = ReflectionVector::kModulusTolerance);

}  // namespace irs
