#pragma once

// Laurent biorthogonal polynomial families
//   P_n(x) = (x - c_{n-1}) P_{n-1}(x) - b_{n-1} x P_{n-2}(x),  P_0 = 1, P_1 = x - c_0
// and their moments, the first column of the inverse coefficient array.

#include "lbp/errors.hpp"
#include "lbp/matrix.hpp"
#include "lbp/riordan.hpp"
#include "lbp/series.hpp"
#include "lbp/xpoly.hpp"

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace lbp {

// Recurrence data. Each sequence is a finite list read cyclically, so a
// constant family has one-element lists and b_n = 1, 2, 1, 2, ... is {1, 2}
// (indexed from b_0). All entries must be nonzero.
template <Field S>
class LbpFamily {
 public:
  LbpFamily(std::vector<S> b_seq, std::vector<S> c_seq) : b_(std::move(b_seq)), c_(std::move(c_seq)) {
    if (b_.empty() || c_.empty()) throw UsageError("LBP family needs nonempty b and c sequences");
    for (const auto& v : b_)
      if (v.is_zero()) throw MathError("LBP parameter b must be nonzero");
    for (const auto& v : c_)
      if (v.is_zero()) throw MathError("LBP parameter c must be nonzero");
  }
  static LbpFamily constant(S b, S c) { return LbpFamily(std::vector<S>{std::move(b)}, std::vector<S>{std::move(c)}); }

  bool is_constant() const { return b_.size() == 1 && c_.size() == 1; }
  const S& b(std::size_t n) const { return b_[n % b_.size()]; }
  const S& c(std::size_t n) const { return c_[n % c_.size()]; }
  const std::vector<S>& b_sequence() const { return b_; }
  const std::vector<S>& c_sequence() const { return c_; }

 private:
  std::vector<S> b_;
  std::vector<S> c_;
};

template <Field S>
std::vector<XPoly<S>> lbp_rows_by_recurrence(const LbpFamily<S>& fam, std::size_t n_max) {
  const XPoly<S> x = XPoly<S>::x();
  std::vector<XPoly<S>> rows{XPoly<S>(S(1))};
  if (n_max >= 1) rows.push_back(x - XPoly<S>(fam.c(0)));
  for (std::size_t n = 2; n <= n_max; ++n)
    rows.push_back((x - XPoly<S>(fam.c(n - 1))) * rows[n - 1] - XPoly<S>(fam.b(n - 1)) * x * rows[n - 2]);
  return rows;
}

// Coefficient array rows 0..n_max, row n holding P_n's coefficients.
template <Field S>
LowerTriangularMatrix<S> lbp_coefficient_matrix(const LbpFamily<S>& fam, std::size_t n_max) {
  const auto rows = lbp_rows_by_recurrence(fam, n_max);
  LowerTriangularMatrix<S> m(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n)
    for (std::size_t k = 0; k <= n; ++k) m.set(n, k, rows[n].coefficient(k));
  return m;
}

// (1/(1+ct), t(1-bt)/(1+ct)); only for constant coefficients.
template <Field S>
RiordanArray<S> lbp_coefficient_array(const LbpFamily<S>& fam, std::size_t order) {
  if (!fam.is_constant()) throw MathError("closed-form coefficient array needs constant b, c");
  const S& b = fam.b(0);
  const S& c = fam.c(0);
  const auto denom = TruncatedSeries<S>({S(1), c}, order);
  const auto one = TruncatedSeries<S>::constant(S(1), order);
  const auto num_f = TruncatedSeries<S>({S(0), S(1), -b}, order);
  return RiordanArray<S>(one / denom, num_f / denom);
}

// a(n, k) = sum_j binom(k, j) binom(n-j, n-k-j) (-b)^j (-c)^(n-k-j)
template <Ring S>
S lbp_entry_closed_form(long n, long k, const S& b, const S& c) {
  if (k < 0 || k > n) return S(0);
  S sum(0);
  for (long j = 0; j <= k && j <= n - k; ++j)
    sum = sum + binom<S>(k, j) * binom<S>(n - j, n - k - j) * power(-b, j) * power(-c, n - k - j);
  return sum;
}

// Rows P_n(x) read off the bivariate generating function
// sum_n P_n(x) t^n = 1/(1 + ct + xt(bt - 1)), with x kept formal.
template <Field S>
std::vector<XPoly<S>> lbp_rows_by_generating_function(const S& b, const S& c, std::size_t n_max) {
  using P = XPoly<S>;
  const P x = P::x();
  const auto denom = TruncatedSeries<P>({P(S(1)), P(c) - x, P(b) * x}, n_max);
  const auto gf = TruncatedSeries<P>::constant(P(S(1)), n_max) / denom;
  return gf.coefficients();
}

// The moment matrix: the inverse of the coefficient array, rows 0..n_max.
template <Field S>
LowerTriangularMatrix<S> lbp_moment_matrix(const LbpFamily<S>& fam, std::size_t n_max) {
  return lbp_coefficient_matrix(fam, n_max).inverse();
}

enum class MomentRoute {
  kMatrixInverse,     // first column of the inverted coefficient matrix
  kCatalanSum,        // sum_k binom(2n-k-1, 2n-2k) C_{n-k} b^(n-k) c^k
  kLagrange,          // k = 0 column of the Lagrange-inversion entry formula
  kShiftedTFraction,  // [n=0] + c * sum_k binom(n+k-1, 2k) c^(n-k-1) b^k C_k
  kGfExpansion,       // series of (c + 2b - c^2 t - c sqrt(1 - 2(2b+c)t + c^2 t^2)) / 2b
};

inline constexpr std::array<MomentRoute, 5> kAllMomentRoutes = {
    MomentRoute::kMatrixInverse, MomentRoute::kCatalanSum, MomentRoute::kLagrange,
    MomentRoute::kShiftedTFraction, MomentRoute::kGfExpansion};

std::string_view to_string(MomentRoute r);
MomentRoute parse_moment_route(std::string_view name);

template <Ring S>
struct MomentSequence {
  std::vector<S> values;  // mu_0 .. mu_N
  MomentRoute route = MomentRoute::kMatrixInverse;

  std::size_t order() const { return values.size() - 1; }
  const S& operator[](std::size_t n) const { return values.at(n); }
};

// (n, k) entry of the inverse coefficient matrix by Lagrange inversion:
//   k/n sum_j binom(n,j) binom(2n-k-j-1, n-k-j) c^j b^(n-k-j)
//   + c(k+1)/n sum_j binom(n,j) binom(2n-k-j-2, n-k-j-1) c^j b^(n-k-j-1)
// with j over 0..n; out-of-range binomials vanish. Requires n >= 1.
template <Field S>
S inverse_entry_lagrange(long n, long k, const S& b, const S& c) {
  if (n < 1) throw UsageError("Lagrange entry formula needs n >= 1");
  if (k < 0 || k > n) return S(0);
  S first(0);
  S second(0);
  for (long j = 0; j <= n; ++j) {
    const BigInt w1 = binomial(n, j) * binomial(2 * n - k - j - 1, n - k - j);
    if (w1 != 0) first = first + S(Rational(w1)) * power(c, j) * power(b, n - k - j);
    const BigInt w2 = binomial(n, j) * binomial(2 * n - k - j - 2, n - k - j - 1);
    if (w2 != 0) second = second + S(Rational(w2)) * power(c, j) * power(b, n - k - j - 1);
  }
  return S(Rational(k, n)) * first + c * S(Rational(k + 1, n)) * second;
}

namespace detail {

template <Field S>
S catalan_sum_moment(long n, const S& b, const S& c) {
  S sum(0);
  for (long k = 0; k <= n; ++k) {
    const BigInt w = binomial(2 * n - k - 1, 2 * n - 2 * k) * catalan(n - k);
    if (w != 0) sum = sum + S(Rational(w)) * power(b, n - k) * power(c, k);
  }
  return sum;
}

template <Field S>
S shifted_tfraction_moment(long n, const S& b, const S& c) {
  if (n == 0) return S(1);
  S sum(0);
  for (long k = 0; k < n; ++k)
    sum = sum + binom<S>(n + k - 1, 2 * k) * power(c, n - k - 1) * power(b, k) * S(Rational(catalan(k)));
  return c * sum;
}

template <Field S>
TruncatedSeries<S> moment_generating_function(const S& b, const S& c, std::size_t order) {
  const S two(2);
  const auto radicand = TruncatedSeries<S>({S(1), -two * (two * b + c), c * c}, order);
  const auto root = sqrt(radicand);
  const auto lin = TruncatedSeries<S>({c + two * b, -(c * c)}, order);
  return (S(1) / (two * b)) * (lin - c * root);
}

}  // namespace detail

template <Field S>
MomentSequence<S> moments(const LbpFamily<S>& fam, MomentRoute route, std::size_t order) {
  MomentSequence<S> out;
  out.route = route;
  if (route == MomentRoute::kMatrixInverse) {
    out.values = lbp_moment_matrix(fam, order).column(0);
    return out;
  }
  if (!fam.is_constant())
    throw MathError(std::string("moment route '") + std::string(to_string(route)) + "' needs constant b, c");
  const S& b = fam.b(0);
  const S& c = fam.c(0);
  switch (route) {
    case MomentRoute::kCatalanSum:
      for (std::size_t n = 0; n <= order; ++n) out.values.push_back(detail::catalan_sum_moment(static_cast<long>(n), b, c));
      break;
    case MomentRoute::kLagrange:
      out.values.push_back(S(1));
      for (std::size_t n = 1; n <= order; ++n) out.values.push_back(inverse_entry_lagrange(static_cast<long>(n), 0L, b, c));
      break;
    case MomentRoute::kShiftedTFraction:
      for (std::size_t n = 0; n <= order; ++n) out.values.push_back(detail::shifted_tfraction_moment(static_cast<long>(n), b, c));
      break;
    case MomentRoute::kGfExpansion:
      out.values = detail::moment_generating_function(b, c, order).coefficients();
      break;
    case MomentRoute::kMatrixInverse:
      break;
  }
  return out;
}

}  // namespace lbp
