#pragma once

#include "irs/analysis.hpp"
#include "irs/linalg.hpp"
#include "irs/reflection.hpp"
#include "irs/rng.hpp"
#include "irs/scenario.hpp"

namespace irs {

// Maximum ratio transmission: f = (h_d^^H + v^H Z^)^H / ||.||.
// Throws DegenerateChannel when the combined estimate is zero.
CVector mrt_vector(const CVector& direct_hat, const CMatrix& cascade_hat, const ReflectionVector& v);

enum class EigenMethod {
  power,  // shifted power iteration
  dense,  // full Hermitian eigendecomposition (reference path)
};

struct EigenOptions {
  EigenMethod method = EigenMethod::power;
  double tolerance = 1e-10;  // on the change of the normalized iterate
  int max_iterations = 10'000;
};

// Dominant eigenvector of a Hermitian PSD matrix, unit norm.
//
// The power path iterates on B - mu I where mu is the Gershgorin lower bound of
// the spectrum (clamped at 0). This keeps the dominant eigenvector and removes
// the common offset that the folded identity terms put on every eigenvalue.
CVector dominant_eigenvector(const CMatrix& b, const EigenOptions& options = {});

// Relaxed maximizer of (v^H J v)^2 / (v^H Q v): with B = Q^{-1/2} J Q^{-1/2}
// and w its dominant eigenvector, returns v' = Q^{-1/2} w, scaled to unit norm
// and rotated so that its first non-negligible entry is real positive.
// Entries of v' are not unit modulus.
//
// When Q is a multiple of J (perfect CSI) B is a multiple of I and the quotient
// is flat; the dominant eigenvector of J is returned instead, which maximizes
// the objective among vectors of fixed norm.
CVector solve_statistical_reflection(const StatMatrices& sm, const EigenOptions& options = {});

// v_i = exp(j arg v'_i); entries with |v'_i| < 1e-12 map to 1.
ReflectionVector phase_extract(const CVector& relaxed);

// solve_statistical_reflection followed by phase_extract.
ReflectionVector statistical_reflection(const StatMatrices& sm, const EigenOptions& options = {});

// i.i.d. phases, uniform on [0, 2 pi).
ReflectionVector random_reflection(Eigen::Index total_elements, Rng& rng);

// M = 1 only. Phase shift of element i is -(theta_g + theta_H), where theta_H is
// the angle of the BS -> IRS LoS coefficient and theta_g the angle of the
// IRS -> user LoS coefficient as it enters the cascade (conj(g_bar)). Every
// term of v^H Gbar Hbar then adds in phase.
ReflectionVector siso_optimal_phases(const ChannelStatistics& stats);

}  // namespace irs
