#pragma once

// Hankel and Toeplitz determinants of a moment sequence, the extension of the
// moments to negative indices, and the determinantal form of P_n(x).

#include "lbp/errors.hpp"
#include "lbp/lbp.hpp"
#include "lbp/matrix.hpp"
#include "lbp/xpoly.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace lbp {

// h_n = det(mu_{i+j})_{0<=i,j<=n} for n = 0..n_max; needs 2 n_max <= N.
template <Ring S>
std::vector<S> hankel_transform(const MomentSequence<S>& mu, std::size_t n_max) {
  if (2 * n_max > mu.order())
    throw UsageError("Hankel transform to n = " + std::to_string(n_max) + " needs moments to order " + std::to_string(2 * n_max));
  std::vector<S> h;
  for (std::size_t n = 0; n <= n_max; ++n) {
    Matrix<S> m(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) m(i, j) = mu[i + j];
    h.push_back(determinant(m));
  }
  return h;
}

// Heilermann: h_n = prod_{k=1..n} l_k^(n-k+1) for J-fraction coefficients l_k
// (with mu_0 = 1).
template <Ring S>
S hankel_from_jfraction(const std::vector<S>& lambdas, std::size_t n) {
  if (n > lambdas.size()) throw UsageError("not enough J-fraction coefficients for h_" + std::to_string(n));
  S h(1);
  for (std::size_t k = 1; k <= n; ++k) h = h * power(lambdas[k - 1], static_cast<long>(n - k + 1));
  return h;
}

// mu_n for n >= -depth, with mu_{-k} = mu_{1+k} / c^{1+2k}.
template <Field S>
class BiInfiniteMoments {
 public:
  BiInfiniteMoments(std::vector<S> forward, std::vector<S> backward)
      : forward_(std::move(forward)), backward_(std::move(backward)) {}

  std::size_t forward_order() const { return forward_.size() - 1; }
  std::size_t depth() const { return backward_.size(); }
  const std::vector<S>& forward() const { return forward_; }
  const std::vector<S>& backward() const { return backward_; }  // mu_{-1}, mu_{-2}, ...

  const S& at(long n) const {
    if (n >= 0) {
      if (static_cast<std::size_t>(n) >= forward_.size()) throw UsageError("moment index " + std::to_string(n) + " beyond stored order");
      return forward_[static_cast<std::size_t>(n)];
    }
    if (static_cast<std::size_t>(-n) > backward_.size()) throw UsageError("moment index " + std::to_string(n) + " beyond stored depth");
    return backward_[static_cast<std::size_t>(-n - 1)];
  }

 private:
  std::vector<S> forward_;
  std::vector<S> backward_;
};

template <Field S>
BiInfiniteMoments<S> extend_moments(const MomentSequence<S>& mu, const S& c, std::size_t depth) {
  if (c.is_zero()) throw MathError("extending moments to negative indices needs c invertible");
  if (depth + 1 > mu.order())
    throw UsageError("depth " + std::to_string(depth) + " needs moments to order " + std::to_string(depth + 1));
  std::vector<S> back;
  for (std::size_t k = 1; k <= depth; ++k) back.push_back(mu[1 + k] / power(c, static_cast<long>(1 + 2 * k)));
  return BiInfiniteMoments<S>(mu.values, std::move(back));
}

template <Ring S>
struct ToeplitzDeterminants {
  std::vector<S> t;        // t_n = det(mu_{k-j})_{0<=j,k<=n}
  std::vector<S> t_prime;  // t'_n = det(mu_{1-j+k})_{0<=j,k<=n}
};

template <Field S>
ToeplitzDeterminants<S> toeplitz_dets(const BiInfiniteMoments<S>& bm, std::size_t n_max) {
  if (bm.depth() < n_max || bm.forward_order() < n_max + 1)
    throw UsageError("Toeplitz determinants to n = " + std::to_string(n_max) + " need depth " + std::to_string(n_max) +
                     " and moments to order " + std::to_string(n_max + 1));
  ToeplitzDeterminants<S> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    Matrix<S> m(n + 1, n + 1);
    Matrix<S> mp(n + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t k = 0; k <= n; ++k) {
        const long d = static_cast<long>(k) - static_cast<long>(j);
        m(j, k) = bm.at(d);
        mp(j, k) = bm.at(d + 1);
      }
    out.t.push_back(determinant(m));
    out.t_prime.push_back(determinant(mp));
  }
  return out;
}

// b = -t_{n-1} t'_{n+1} / (t_n t'_n),  c = t_n t'_{n+1} / (t_{n+1} t'_n).
template <Field S>
std::pair<S, S> recover_parameters(const ToeplitzDeterminants<S>& td, std::size_t n) {
  if (n < 1 || n + 1 >= td.t.size() || n + 1 >= td.t_prime.size())
    throw UsageError("parameter recovery at n = " + std::to_string(n) + " needs t_{n-1}..t_{n+1} and t'_n, t'_{n+1}");
  const S den_b = td.t[n] * td.t_prime[n];
  const S den_c = td.t[n + 1] * td.t_prime[n];
  if (den_b.is_zero() || den_c.is_zero()) throw MathError("parameter recovery: vanishing Toeplitz denominator at n = " + std::to_string(n));
  return {-(td.t[n - 1] * td.t_prime[n + 1]) / den_b, td.t[n] * td.t_prime[n + 1] / den_c};
}

// P_n(x) as the bordered Toeplitz determinant with rows (mu_{k-j})_{k=0..n}
// for j = 0..n-1 and last row 1, x, ..., x^n. It is normalized by t_{n-1},
// the cofactor of x^n, which makes the result monic.
template <Field S>
XPoly<S> lbp_by_determinant(const BiInfiniteMoments<S>& bm, std::size_t n) {
  if (n == 0) return XPoly<S>(S(1));
  if (bm.depth() + 1 < n || bm.forward_order() < n)
    throw UsageError("determinantal P_" + std::to_string(n) + " needs depth " + std::to_string(n - 1) + " and moments to order " + std::to_string(n));
  Matrix<S> top(n, n + 1);
  Matrix<S> lead(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k <= n; ++k) {
      top(j, k) = bm.at(static_cast<long>(k) - static_cast<long>(j));
      if (k < n) lead(j, k) = top(j, k);
    }
  const S norm = determinant(lead);
  if (norm.is_zero()) throw MathError("determinantal P_n: t_{n-1} vanishes");
  const XPoly<S> det = bordered_determinant(top);
  return det / XPoly<S>(norm);
}

}  // namespace lbp
