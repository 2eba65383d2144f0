#pragma once

// Reference computations written directly from the model definitions. They
// share no code with the library beyond the data types.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Cholesky>

#include "irs/linalg.hpp"
#include "irs/scenario.hpp"

namespace irs::oracle {

struct Moment {
  double mean = 0.0;
  double std_error = 0.0;
};

struct ExpectationEstimate {
  Moment signal;  // E{||h_d^^H + v^H Z^||^2}
  Moment error;   // E{|(e_d^H + v^H E_Z)(h_d^ + Z^^H v)|^2}
  Moment q;       // sigma2 * signal + error, per draw
};

namespace detail {

class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : gen_(seed) {}
  Complex cn(double var) {
    const double s = std::sqrt(var / 2.0);
    return {s * n_(gen_), s * n_(gen_)};
  }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> n_{0.0, 1.0};
};

inline double los_w(const RicianFactor& k) {
  return k.is_pure_los() ? 1.0 : k.value() / (k.value() + 1.0);
}
inline double nlos_w(const RicianFactor& k) {
  return k.is_pure_los() ? 0.0 : 1.0 / (k.value() + 1.0);
}

inline Moment summarize(const std::vector<double>& x) {
  long double s = 0.0L;
  for (double e : x) s += e;
  const double mean = static_cast<double>(s / x.size());
  long double ss = 0.0L;
  for (double e : x) ss += (e - mean) * (e - mean);
  const double var = x.size() > 1 ? static_cast<double>(ss / (x.size() - 1)) : 0.0;
  return {mean, std::sqrt(var / static_cast<double>(x.size()))};
}

}  // namespace detail

// Brute-force Monte Carlo of the numerator and error-power expectations for a
// fixed v. Each IRS is sampled on its own (Cholesky factor of its correlation
// block) and the received row is formed as h_d^H + sum_n g_n^H Phi_n H_n.
inline ExpectationEstimate expectations_mc(const std::vector<IrsBlock>& blocks, double corr, const CVector& v,
                                           double xi, double sigma2, int draws, std::uint64_t seed) {
  detail::Gaussian gauss(seed);
  const int n_irs = static_cast<int>(blocks.size());
  const Eigen::Index l = blocks.front().los_irs_user.size();
  const Eigen::Index m = blocks.front().los_bs_irs.cols();

  CMatrix r(l, l);
  for (Eigen::Index i = 0; i < l; ++i)
    for (Eigen::Index j = 0; j < l; ++j) r(i, j) = std::pow(corr, std::abs(static_cast<double>(i - j)));
  const CMatrix chol = Eigen::LLT<CMatrix>(r).matrixL();

  std::vector<double> xs, ys, qs;
  xs.reserve(draws);
  ys.reserve(draws);
  qs.reserve(draws);
  for (int t = 0; t < draws; ++t) {
    Eigen::RowVectorXcd true_row(m);
    Eigen::RowVectorXcd err_row(m);
    for (Eigen::Index j = 0; j < m; ++j) true_row(j) = std::conj(gauss.cn(1.0));  // h_d^H
    for (Eigen::Index j = 0; j < m; ++j) err_row(j) = std::conj(gauss.cn(xi));     // e_d^H
    for (int n = 0; n < n_irs; ++n) {
      const auto& b = blocks[static_cast<std::size_t>(n)];
      CMatrix w(l, m);
      for (Eigen::Index j = 0; j < m; ++j)
        for (Eigen::Index i = 0; i < l; ++i) w(i, j) = gauss.cn(1.0);
      const CMatrix h = std::sqrt(b.link.bs_gain * detail::los_w(b.link.bs_k)) * b.los_bs_irs +
                        std::sqrt(b.link.bs_gain * detail::nlos_w(b.link.bs_k)) * (chol * w);
      CVector g(l);
      for (Eigen::Index i = 0; i < l; ++i)
        g(i) = std::sqrt(b.link.user_gain * detail::los_w(b.link.user_k)) * b.los_irs_user(i) +
               std::sqrt(b.link.user_gain * detail::nlos_w(b.link.user_k)) * gauss.cn(1.0);
      for (Eigen::Index i = 0; i < l; ++i) {
        // g^H Phi H with Phi = diag(conj(v)).
        const Complex coeff = std::conj(g(i)) * std::conj(v(n * l + i));
        true_row += coeff * h.row(i);
      }
      for (Eigen::Index i = 0; i < l; ++i)
        for (Eigen::Index j = 0; j < m; ++j) err_row(j) += std::conj(v(n * l + i)) * gauss.cn(xi);
    }
    const Eigen::RowVectorXcd est_row = true_row - err_row;
    const double x = est_row.squaredNorm();
    const double y = std::norm((err_row * est_row.adjoint())(0, 0));
    xs.push_back(x);
    ys.push_back(y);
    qs.push_back(sigma2 * x + y);
  }
  return {detail::summarize(xs), detail::summarize(ys), detail::summarize(qs)};
}

// Upsilon_1 written from the per-IRS Rician coefficients.
inline double upsilon(const std::vector<double>& alpha, const std::vector<double>& beta,
                      const std::vector<double>& k1, const std::vector<double>& k2, int l) {
  const double inf = std::numeric_limits<double>::infinity();
  double coherent = 0.0;
  double diffuse = 0.0;
  for (std::size_t n = 0; n < alpha.size(); ++n) {
    const double ab = alpha[n] * beta[n];
    if (k1[n] == inf && k2[n] == inf) {
      coherent += std::sqrt(ab);
    } else if (k1[n] == inf) {
      coherent += std::sqrt(ab * k2[n] / (k2[n] + 1.0));
      diffuse += ab / (k2[n] + 1.0);
    } else if (k2[n] == inf) {
      coherent += std::sqrt(ab * k1[n] / (k1[n] + 1.0));
      diffuse += ab / (k1[n] + 1.0);
    } else {
      coherent += std::sqrt(ab * k1[n] * k2[n] / ((k1[n] + 1.0) * (k2[n] + 1.0)));
      diffuse += ab * (k1[n] + k2[n] + 1.0) / ((k1[n] + 1.0) * (k2[n] + 1.0));
    }
  }
  return l * l * coherent * coherent + l * diffuse;
}

struct GridResult {
  double best = -1.0;
  std::vector<int> index;
};

// Exhaustive enumeration of v_i = exp(j 2 pi k_i / levels), scoring
// (v^H J v)^2 / (v^H Q v). Tuples are decoded from a flat counter with k_0 the
// most significant digit.
inline GridResult grid_enumerate(const CMatrix& j, const CMatrix& q, int levels) {
  const Eigen::Index nl = j.rows();
  long long total = 1;
  for (Eigen::Index i = 0; i < nl; ++i) total *= levels;
  std::vector<Complex> ph(static_cast<std::size_t>(levels));
  for (int k = 0; k < levels; ++k) ph[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * kPi * k / levels);
  GridResult out;
  CVector v(nl);
  std::vector<int> idx(static_cast<std::size_t>(nl));
  for (long long c = 0; c < total; ++c) {
    long long rest = c;
    for (Eigen::Index i = nl - 1; i >= 0; --i) {
      idx[static_cast<std::size_t>(i)] = static_cast<int>(rest % levels);
      rest /= levels;
      v(i) = ph[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    const double x = (v.adjoint() * j * v)(0, 0).real();
    const double y = (v.adjoint() * q * v)(0, 0).real();
    const double f = x * x / y;
    if (f > out.best) {
      out.best = f;
      out.index = idx;
    }
  }
  return out;
}

inline double snr_objective(const CVector& v, const CMatrix& j, const CMatrix& q) {
  const double x = (v.adjoint() * j * v)(0, 0).real();
  const double y = (v.adjoint() * q * v)(0, 0).real();
  return x * x / y;
}

}  // namespace irs::oracle
