#pragma once

#include "irs/linalg.hpp"
#include "irs/rng.hpp"
#include "irs/scenario.hpp"

namespace irs {

// One fading draw.
struct ChannelRealization {
  CMatrix bs_irs;         // H, NL x M
  CVector irs_user_diag;  // diagonal of G = conj(g) stacked over IRSs
  CVector direct;         // h_d, M
  CMatrix cascade;        // Z = G H, NL x M

  CMatrix irs_user_matrix() const { return irs_user_diag.asDiagonal(); }
};

// Draws realizations from fixed statistics. Holds R^{1/2} so repeated draws do
// not refactor it.
class ChannelSampler {
 public:
  explicit ChannelSampler(const ChannelStatistics& stats);

  // H = Hbar + K1 R^{1/2} W; g_n = LoS + sqrt(a/(K2+1)) g~_n; h_d ~ CN(0, I_M).
  ChannelRealization sample(Rng& rng) const;

  const ChannelStatistics& statistics() const { return *stats_; }

 private:
  const ChannelStatistics* stats_;
  CMatrix corr_sqrt_;
  bool uncorrelated_ = false;
};

ChannelRealization sample_channels(const ChannelStatistics& stats, Rng& rng);

}  // namespace irs
