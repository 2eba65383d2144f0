#include "doctest.h"

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "irs/channel.hpp"
#include "irs/reflection.hpp"

using namespace irs;

TEST_SUITE("channel") {

TEST_CASE("pure LoS draws equal the mean") {
  std::mt19937_64 gen(3);
  testing::BlockDraw d;
  d.pure_los_probability = 1.0;
  const auto s = assemble_statistics(testing::random_blocks(gen, 3, 4, 2, d), 0.3);
  Rng rng(5);
  const auto r = sample_channels(s, rng);
  CHECK(r.bs_irs == s.mean_bs_irs);
  CHECK(r.irs_user_diag == s.mean_irs_user);
}

TEST_CASE("cascade is Gdiag H") {
  std::mt19937_64 gen(4);
  const auto s = assemble_statistics(testing::random_blocks(gen, 2, 3, 2), 0.5);
  Rng rng(6);
  const auto r = sample_channels(s, rng);
  CHECK((r.cascade - r.irs_user_matrix() * r.bs_irs).norm() < 1e-14);
  const CMatrix g = r.irs_user_matrix();
  CHECK((g - CMatrix(g.diagonal().asDiagonal())).norm() == 0.0);
}

TEST_CASE("fixed seed reproduces the draw") {
  std::mt19937_64 gen(4);
  const auto s = assemble_statistics(testing::random_blocks(gen, 2, 3, 2), 0.5);
  Rng a(9), b(9);
  const auto ra = sample_channels(s, a);
  const auto rb = sample_channels(s, b);
  CHECK(ra.bs_irs == rb.bs_irs);
  CHECK(ra.irs_user_diag == rb.irs_user_diag);
  CHECK(ra.direct == rb.direct);
}

TEST_CASE("stacked cascade matches the per-IRS sum") {
  std::mt19937_64 gen(11);
  const int n = 3, l = 4, m = 3;
  const auto s = assemble_statistics(testing::random_blocks(gen, n, l, m), 0.4);
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto r = sample_channels(s, rng);
    const CVector v = testing::random_phases(gen, n * l);
    const CVector f = rng.complex_normal_vector(m);
    const Complex stacked = (v.adjoint() * r.cascade * f)(0, 0);
    Complex sum = 0.0;
    for (int k = 0; k < n; ++k) {
      // g_n^H Phi_n H_n with g_n^H = diag entries of the conjugated block and Phi_n = diag(conj(v_n)).
      const CVector gh = r.irs_user_diag.segment(k * l, l);
      const CVector phi = v.segment(k * l, l).conjugate();
      const CMatrix hn = r.bs_irs.middleRows(k * l, l);
      sum += (gh.cwiseProduct(phi).transpose() * hn * f)(0, 0);
    }
    CHECK(std::abs(stacked - sum) < 1e-10);
  }
}

TEST_CASE("Rayleigh BS->IRS entries have unit power") {
  const auto blocks = testing::aligned_blocks(1, 2, 2, 1.0, 1.0, RicianFactor(0.0), RicianFactor(0.0));
  const auto s = assemble_statistics(blocks, 0.0);
  const ChannelSampler sampler(s);
  Rng rng(13);
  const int draws = 100000;
  double acc = 0.0;
  for (int t = 0; t < draws; ++t) acc += sampler.sample(rng).bs_irs.cwiseAbs2().mean();
  CHECK(std::abs(acc / draws - 1.0) < 0.02);
}

TEST_CASE("empirical mean and covariance of H") {
  std::mt19937_64 gen(21);
  testing::BlockDraw d;
  d.pure_los_probability = 0.0;
  d.k_max = 3.0;
  const int l = 4;
  const double corr = 0.7;
  const auto s = assemble_statistics(testing::random_blocks(gen, 1, l, 2, d), corr);
  const ChannelSampler sampler(s);
  Rng rng(22);
  const int draws = 100000;
  CMatrix mean = CMatrix::Zero(l, 2);
  CMatrix cov = CMatrix::Zero(l, l);
  for (int t = 0; t < draws; ++t) {
    const auto r = sampler.sample(rng);
    mean += r.bs_irs;
    const CMatrix dev = r.bs_irs - s.mean_bs_irs;
    cov += dev * dev.adjoint();  // sums over the M i.i.d. columns
  }
  mean /= draws;
  cov /= (2.0 * draws);
  const double nlos_var = s.nlos_bs_irs(0) * s.nlos_bs_irs(0);
  const double se = std::sqrt(nlos_var / draws);
  CHECK((mean - s.mean_bs_irs).cwiseAbs().maxCoeff() < 3.0 * se * std::sqrt(2.0));
  const CMatrix expected = nlos_var * s.correlation;
  CHECK((cov - expected).norm() / expected.norm() < 0.05);
}

TEST_CASE("direct link is unit-variance Rayleigh") {
  std::mt19937_64 gen(1);
  const auto s = assemble_statistics(testing::random_blocks(gen, 1, 1, 4), 0.0);
  Rng rng(2);
  const int draws = 50000;
  double acc = 0.0;
  for (int t = 0; t < draws; ++t) acc += sample_channels(s, rng).direct.squaredNorm();
  CHECK(std::abs(acc / draws / 4.0 - 1.0) < 0.02);
}

}  // TEST_SUITE
