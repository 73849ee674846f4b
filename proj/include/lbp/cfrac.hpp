#pragma once

// Finite-depth continued fractions in t, expanded as truncated series.
//
//   S-fraction  1/(1 - a_1 t/(1 - a_2 t/(1 - ...)))
//   J-fraction  1/(1 - d_0 t - l_1 t^2/(1 - d_1 t - l_2 t^2/(1 - ...)))
//   T-fraction  1/(1 - d_0 t - n_1 t/(1 - d_1 t - n_2 t/(1 - ...)))
//
// The part below the deepest stored level is replaced by 1. Each level deeper
// pushes the first affected coefficient one order up (two for J), which gives
// the valid_order() rule of each shape.

#include "lbp/errors.hpp"
#include "lbp/lbp.hpp"
#include "lbp/matrix.hpp"
#include "lbp/riordan.hpp"
#include "lbp/series.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace lbp {

template <Ring S>
struct SFraction {
  std::vector<S> alphas;  // a_1, a_2, ...

  std::size_t valid_order() const { return alphas.size(); }
};

template <Ring S>
struct JFraction {
  std::vector<S> diag;  // d_0, d_1, ...
  std::vector<S> sub;   // l_1, l_2, ...

  // m diagonal terms give order 2m-1, or 2m when l_m is also stored.
  std::size_t valid_order() const {
    const std::size_t m = diag.size();
    if (m == 0) return 0;
    return sub.size() >= m ? 2 * m : 2 * m - 1;
  }
};

template <Ring S>
struct TFraction {
  std::vector<S> diag;  // d_0, d_1, ...
  std::vector<S> num;   // n_1, n_2, ...

  std::size_t valid_order() const {
    const std::size_t m = diag.size();
    if (m == 0) return 0;
    return num.size() >= m ? m : m - 1;
  }
};

template <Ring S>
SFraction<S> make_sfraction(std::size_t levels, const std::function<S(std::size_t)>& alpha) {
  SFraction<S> s;
  for (std::size_t k = 1; k <= levels; ++k) s.alphas.push_back(alpha(k));
  return s;
}

namespace detail {

template <Ring S>
void require_levels(std::size_t valid, std::size_t order, const char* shape) {
  if (valid < order)
    throw MathError(std::string(shape) + "-fraction has too few levels: valid to order " + std::to_string(valid) +
                    ", requested " + std::to_string(order));
}

}  // namespace detail

template <Ring S>
TruncatedSeries<S> cf_expand(const SFraction<S>& cf, std::size_t order) {
  detail::require_levels<S>(cf.valid_order(), order, "S");
  const auto one = TruncatedSeries<S>::constant(S(1), order);
  const auto t = TruncatedSeries<S>::variable(order);
  TruncatedSeries<S> u = one;
  for (std::size_t k = cf.alphas.size(); k-- > 0;) u = one / (one - cf.alphas[k] * (t * u));
  return u;
}

template <Ring S>
TruncatedSeries<S> cf_expand(const JFraction<S>& cf, std::size_t order) {
  detail::require_levels<S>(cf.valid_order(), order, "J");
  const auto one = TruncatedSeries<S>::constant(S(1), order);
  const auto t = TruncatedSeries<S>::variable(order);
  const auto t2 = t * t;
  TruncatedSeries<S> u = one;
  for (std::size_t k = cf.diag.size(); k-- > 0;) {
    const S lambda = k < cf.sub.size() ? cf.sub[k] : S(0);
    u = one / (one - cf.diag[k] * t - lambda * (t2 * u));
  }
  return u;
}

template <Ring S>
TruncatedSeries<S> cf_expand(const TFraction<S>& cf, std::size_t order) {
  detail::require_levels<S>(cf.valid_order(), order, "T");
  const auto one = TruncatedSeries<S>::constant(S(1), order);
  const auto t = TruncatedSeries<S>::variable(order);
  TruncatedSeries<S> u = one;
  for (std::size_t k = cf.diag.size(); k-- > 0;) {
    const S numer = k < cf.num.size() ? cf.num[k] : S(0);
    u = one / (one - cf.diag[k] * t - numer * (t * u));
  }
  return u;
}

// The constant T-fraction with every d_k = c and n_k = b, which expands to the
// shifted moment series mu~.
template <Ring S>
TFraction<S> lbp_tfraction(const S& b, const S& c, std::size_t order) {
  return TFraction<S>{std::vector<S>(order, c), std::vector<S>(order, b)};
}

// a = (c, b, b+c, b, b+c, ...)
template <Ring S>
SFraction<S> lbp_sfraction(const S& b, const S& c, std::size_t order) {
  return make_sfraction<S>(order, [&](std::size_t k) { return k == 1 ? c : (k % 2 == 0 ? b : b + c); });
}

// d = (c, 2b+c, 2b+c, ...), l = (bc, b(b+c), b(b+c), ...)
template <Ring S>
JFraction<S> lbp_jfraction(const S& b, const S& c, std::size_t order) {
  const std::size_t m = (order + 2) / 2;
  JFraction<S> j;
  for (std::size_t k = 0; k < m; ++k) {
    j.diag.push_back(k == 0 ? c : S(2) * b + c);
    j.sub.push_back(k == 0 ? b * c : b * (b + c));
  }
  return j;
}

// mu~(t) = (1 - ct - sqrt(1 - 2(2b+c)t + c^2 t^2)) / (2bt)
template <Field S>
TruncatedSeries<S> tfraction_closed_form(const S& b, const S& c, std::size_t order) {
  const S two(2);
  const std::size_t n = order + 1;
  const auto radicand = TruncatedSeries<S>({S(1), -two * (two * b + c), c * c}, n);
  const auto numer = TruncatedSeries<S>({S(1), -c}, n) - sqrt(radicand);
  return (S(1) / (two * b)) * numer.shift_down();
}

// Applies the Riordan array (1/(1-ct), t/(1-ct)^2) to the series of b^n C_n.
template <Field S>
TruncatedSeries<S> tfraction_by_riordan_transform(const S& b, const S& c, std::size_t order) {
  const auto one = TruncatedSeries<S>::constant(S(1), order);
  const auto one_minus_ct = TruncatedSeries<S>({S(1), -c}, order);
  const RiordanArray<S> transform(one / one_minus_ct,
                                  TruncatedSeries<S>::variable(order) / (one_minus_ct * one_minus_ct));
  const auto catalan_gf = cf_expand(make_sfraction<S>(order, [&](std::size_t) { return b; }), order);
  return transform.g() * compose(catalan_gf, transform.f());
}

// J-fraction coefficients from the moments by Hankel determinant ratios:
//   l_n = H_{n+1} H_{n-1} / H_n^2,  d_0 + ... + d_{n-1} = X_n / H_n,
// where H_n = det(mu_{i+j})_{0<=i,j<n} and X_n is H_n with its last column
// advanced by one index. Extracts as many levels as the moments support.
template <Field S>
JFraction<S> jfraction_from_moments(const MomentSequence<S>& mu) {
  const std::size_t N = mu.order();
  if (N < 1) throw UsageError("J-fraction extraction needs at least mu_0, mu_1");
  if (!(mu[0] == S(1))) throw MathError("J-fraction extraction expects mu_0 = 1");
  const std::size_t m = (N + 1) / 2;  // diagonal terms; X_m needs mu up to 2m-1
  auto hankel = [&](std::size_t n) {
    Matrix<S> h(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = mu[i + j];
    return determinant(h);
  };
  auto advanced = [&](std::size_t n) {
    Matrix<S> h(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = mu[i + j + (j + 1 == n ? 1 : 0)];
    return determinant(h);
  };
  std::vector<S> H{S(1)};
  for (std::size_t n = 1; n <= m + 1 && 2 * n - 2 <= N; ++n) H.push_back(hankel(n));
  JFraction<S> out;
  S prev_sum(0);
  for (std::size_t n = 1; n <= m; ++n) {
    if (H[n].is_zero())
      throw MathError("moment sequence is not regular: Hankel determinant of size " + std::to_string(n) + " vanishes");
    const S sum = advanced(n) / H[n];
    out.diag.push_back(sum - prev_sum);
    prev_sum = sum;
  }
  for (std::size_t n = 1; n + 1 < H.size(); ++n) out.sub.push_back(H[n + 1] * H[n - 1] / (H[n] * H[n]));
  return out;
}

struct CfCheck {
  std::string name;
  bool passed = false;
  long first_mismatch = -1;
};

// For b = 1: u = 1/(1 - ct - t u) as a T-fraction and
// v = 1/(1 - (c+1)t/(1 - t/(1 - (c+1)t/...))) as an S-fraction agree.
template <Field S>
CfCheck verify_uv_equality(const S& c, std::size_t order) {
  const auto u = cf_expand(lbp_tfraction(S(1), c, order), order);
  const auto v = cf_expand(make_sfraction<S>(order, [&](std::size_t k) { return k % 2 == 1 ? c + S(1) : S(1); }), order);
  const long mm = first_mismatch(u, v);
  return CfCheck{"u(t) = v(t) for b = 1", mm < 0, mm};
}

}  // namespace lbp
