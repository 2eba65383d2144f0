#include "irs/channel.hpp"

namespace irs {

ChannelSampler::ChannelSampler(const ChannelStatistics& stats) : stats_(&stats) {
  const CMatrix& r = stats.correlation;
  uncorrelated_ = (r - CMatrix::Identity(r.rows(), r.cols())).cwiseAbs().maxCoeff() == 0.0;
  if (!uncorrelated_) corr_sqrt_ = matrix_sqrt_psd(r);
}

ChannelRealization ChannelSampler::sample(Rng& rng) const {
  const ChannelStatistics& s = *stats_;
  const Eigen::Index nl = s.total_elements();
  const Eigen::Index m = s.antennas;

  // Draw order is part of the reproducibility contract: W, then g~, then h_d.
  CMatrix w = rng.complex_normal_matrix(nl, m);
  CVector g_scatter = rng.complex_normal_vector(nl);
  CVector direct = rng.complex_normal_vector(m);

  ChannelRealization out;
  if (uncorrelated_) {
    out.bs_irs = s.mean_bs_irs + s.nlos_bs_irs.cast<Complex>().asDiagonal() * w;
  } else {
    out.bs_irs = s.mean_bs_irs + s.nlos_bs_irs.cast<Complex>().asDiagonal() * (corr_sqrt_ * w);
  }
  // Diagonal entries are conj(g): conj of the LoS part is already in mean_irs_user.
  out.irs_user_diag = s.mean_irs_user + s.nlos_irs_user.cast<Complex>().cwiseProduct(g_scatter.conjugate());
  out.direct = std::move(direct);
  out.cascade = out.irs_user_diag.asDiagonal() * out.bs_irs;
  return out;
}

ChannelRealization sample_channels(const ChannelStatistics& stats, Rng& rng) {
  return ChannelSampler(stats).sample(rng);
}

}  // namespace irs
