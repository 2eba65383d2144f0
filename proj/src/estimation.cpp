#include "irs/estimation.hpp"

#include "irs/errors.hpp"

namespace irs {

double estimation_error_variance(int training_length, double training_snr) {
  if (training_length < 0) throw InvalidArgument("estimation_error_variance: T must be >= 0");
  if (!(training_snr >= 0.0)) throw InvalidArgument("estimation_error_variance: rho must be >= 0");
  return 1.0 / (1.0 + static_cast<double>(training_length) * training_snr);
}

double estimation_error_variance(const SystemConfig& cfg) {
  if (cfg.perfect_csi) return 0.0;
  return estimation_error_variance(cfg.training_length, cfg.training_snr);
}

CsiEstimates sample_estimates(const ChannelRealization& realization, double xi, Rng& rng) {
  if (!(xi >= 0.0)) throw InvalidArgument("sample_estimates: xi must be >= 0");
  CsiEstimates e;
  e.error_variance = xi;
  const Eigen::Index nl = realization.cascade.rows();
  const Eigen::Index m = realization.cascade.cols();
  if (xi == 0.0) {
    e.cascade_error = CMatrix::Zero(nl, m);
    e.direct_error = CVector::Zero(m);
  } else {
    e.cascade_error = rng.complex_normal_matrix(nl, m, xi);
    e.direct_error = rng.complex_normal_vector(m, xi);
  }
  e.cascade_hat = realization.cascade - e.cascade_error;
  e.direct_hat = realization.direct - e.direct_error;
  return e;
}

}  // namespace irs
