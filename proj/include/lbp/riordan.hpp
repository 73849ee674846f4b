#pragma once

#include "lbp/errors.hpp"
#include "lbp/matrix.hpp"
#include "lbp/series.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace lbp {

// The Riordan array (g, f): the lower-triangular matrix with entries
// a(n, k) = [t^n] g(t) f(t)^k. Requires g(0) != 0, f(0) = 0, f'(0) != 0.
template <Ring S>
class RiordanArray {
 public:
  RiordanArray(TruncatedSeries<S> g, TruncatedSeries<S> f) {
    const std::size_t n = std::min(g.order(), f.order());
    g_ = g.truncated(n);
    f_ = f.truncated(n);
    if (g_[0].is_zero()) throw MathError("Riordan array needs g(0) != 0");
    if (!f_[0].is_zero()) throw MathError("Riordan array needs f(0) = 0");
    if (n < 1 || f_[1].is_zero()) throw MathError("Riordan array needs f'(0) != 0");
  }

  // (1, t)
  static RiordanArray identity(std::size_t order) {
    return RiordanArray(TruncatedSeries<S>::constant(S(1), order), TruncatedSeries<S>::variable(order));
  }

  const TruncatedSeries<S>& g() const { return g_; }
  const TruncatedSeries<S>& f() const { return f_; }
  std::size_t order() const { return g_.order(); }

  S entry(std::size_t n, std::size_t k) const {
    if (k > n) return S(0);
    if (n > order()) throw UsageError("Riordan entry (" + std::to_string(n) + "," + std::to_string(k) + ") beyond truncation order " + std::to_string(order()));
    TruncatedSeries<S> col = g_;
    for (std::size_t j = 0; j < k; ++j) col = col * f_;
    return col[n];
  }

  // Rows 0..dim-1; dim defaults to order + 1.
  LowerTriangularMatrix<S> materialize(std::optional<std::size_t> dim = std::nullopt) const {
    const std::size_t d = dim.value_or(order() + 1);
    if (d > order() + 1) throw UsageError("cannot materialize beyond truncation order");
    LowerTriangularMatrix<S> m(d);
    TruncatedSeries<S> col = g_;
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t n = k; n < d; ++n) m.set(n, k, col[n]);
      col = col * f_;
    }
    return m;
  }

  // (g_a, f_a) * (g_b, f_b) = (g_a * (g_b o f_a), f_b o f_a)
  friend RiordanArray operator*(const RiordanArray& a, const RiordanArray& b) {
    return RiordanArray(a.g_ * compose(b.g_, a.f_), compose(b.f_, a.f_));
  }

  RiordanArray inverse() const {
    TruncatedSeries<S> fbar = reversion(f_);
    TruncatedSeries<S> g = TruncatedSeries<S>::constant(S(1), order()) / compose(g_, fbar);
    return RiordanArray(std::move(g), std::move(fbar));
  }

  // Coefficientwise equality of (g, f) to the common order.
  friend bool operator==(const RiordanArray& a, const RiordanArray& b) {
    return a.g_ == b.g_ && a.f_ == b.f_;
  }

 private:
  TruncatedSeries<S> g_;
  TruncatedSeries<S> f_;
};

// B(b) = (1/(1-bt), t/(1-bt)), entries binom(n,k) b^(n-k).
template <Ring S>
RiordanArray<S> binomial_array(const S& b, std::size_t order) {
  auto one_minus_bt = TruncatedSeries<S>({S(1), -b}, order);
  auto one = TruncatedSeries<S>::constant(S(1), order);
  return RiordanArray<S>(one / one_minus_bt, TruncatedSeries<S>::variable(order) / one_minus_bt);
}

// P = M^{-1} * Mbar where Mbar is M without its top row. From a d x d block
// only the leading (d-1) x (d-1) block of P is determined, which is what is
// returned.
template <Ring S>
Matrix<S> production_matrix(const LowerTriangularMatrix<S>& m) {
  const std::size_t d = m.dimension();
  if (d < 2) throw UsageError("production matrix needs a block of dimension >= 2");
  const std::size_t p = d - 1;
  const LowerTriangularMatrix<S> inv = m.leading_block(p).inverse();
  Matrix<S> shifted(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p && j <= i + 1; ++j) shifted(i, j) = m.at(i + 1, j);
  return inv.to_dense() * shifted;
}

// Riordan production matrices have every column k >= 1 equal to column 1
// shifted down by k-1 rows. Returns the first (row, col) violating that on the
// given block, or nullopt when the block has the structure.
template <Ring S>
std::optional<std::pair<std::size_t, std::size_t>> column_shift_violation(const Matrix<S>& p) {
  for (std::size_t k = 2; k < p.cols(); ++k)
    for (std::size_t i = 0; i < p.rows(); ++i) {
      const S expected = (i + 1 >= k) ? p(i + 1 - k, 1) : S(0);
      if (!(p(i, k) == expected)) return std::pair{i, k};
    }
  return std::nullopt;
}

}  // namespace lbp
