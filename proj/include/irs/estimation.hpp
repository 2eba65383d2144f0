#pragma once

#include "irs/channel.hpp"
#include "irs/linalg.hpp"
#include "irs/rng.hpp"
#include "irs/scenario.hpp"

namespace irs {

// Transmitter-side CSI: estimate plus the error that separates it from the
// true channel (true = estimate + error, exactly).
struct CsiEstimates {
  CMatrix cascade_hat;
  CVector direct_hat;
  CMatrix cascade_error;
  CVector direct_error;
  double error_variance = 0.0;
};

// xi = 1 / (1 + T rho).
double estimation_error_variance(int training_length, double training_snr);

// As above, or 0 when cfg.perfect_csi is set.
double estimation_error_variance(const SystemConfig& cfg);

// Errors are drawn independently of the channel with per-entry variance xi;
// estimates are defined by subtraction.
CsiEstimates sample_estimates(const ChannelRealization& realization, double xi, Rng& rng);

}  // namespace irs
