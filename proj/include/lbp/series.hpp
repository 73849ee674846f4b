#pragma once

#include "lbp/errors.hpp"
#include "lbp/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace lbp {

inline constexpr std::size_t kDefaultOrder = 16;

// Formal power series in t known exactly through t^order. Binary operations
// return the smaller of the operand orders and never read beyond it.
template <Ring S>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order = kDefaultOrder)
      : coeffs_(order + 1, S(0)), order_(order) {}

  // Coefficients beyond `order` are dropped; missing ones are zero.
  TruncatedSeries(std::vector<S> coeffs, std::size_t order) : coeffs_(std::move(coeffs)), order_(order) {
    coeffs_.resize(order + 1, S(0));
  }
  TruncatedSeries(std::initializer_list<S> coeffs, std::size_t order)
      : TruncatedSeries(std::vector<S>(coeffs), order) {}

  static TruncatedSeries constant(const S& s, std::size_t order) {
    TruncatedSeries r(order);
    r.coeffs_[0] = s;
    return r;
  }
  // The series t.
  static TruncatedSeries variable(std::size_t order) {
    TruncatedSeries r(order);
    if (order >= 1) r.coeffs_[1] = S(1);
    return r;
  }

  std::size_t order() const { return order_; }
  const std::vector<S>& coefficients() const { return coeffs_; }
  const S& operator[](std::size_t n) const {
    if (n > order_) throw UsageError("coefficient index " + std::to_string(n) + " beyond series order " + std::to_string(order_));
    return coeffs_[n];
  }
  void set(std::size_t n, S value) {
    if (n > order_) throw UsageError("coefficient index beyond series order");
    coeffs_[n] = std::move(value);
  }

  // Same series known to a lower order.
  TruncatedSeries truncated(std::size_t order) const {
    if (order > order_) throw UsageError("cannot extend a truncated series");
    return TruncatedSeries(std::vector<S>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    shrink_to(o.order_);
    for (std::size_t i = 0; i <= order_; ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    shrink_to(o.order_);
    for (std::size_t i = 0; i <= order_; ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& o) { return a += o; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& o) { return a -= o; }
  TruncatedSeries operator-() const {
    TruncatedSeries r(order_);
    for (std::size_t i = 0; i <= order_; ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& o) {
    const std::size_t n = std::min(a.order_, o.order_);
    TruncatedSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (o.coeffs_[j].is_zero()) continue;
        r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * o.coeffs_[j];
      }
    }
    return r;
  }
  friend TruncatedSeries operator*(const S& k, const TruncatedSeries& a) {
    TruncatedSeries r(a.order_);
    for (std::size_t i = 0; i <= a.order_; ++i) r.coeffs_[i] = k * a.coeffs_[i];
    return r;
  }

  // Requires an invertible constant term in the divisor.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& d) {
    if (d.coeffs_[0].is_zero())
      throw MathError("series division by a series with zero constant term");
    const std::size_t n = std::min(a.order_, d.order_);
    TruncatedSeries q(n);
    for (std::size_t i = 0; i <= n; ++i) {
      S acc = a.coeffs_[i];
      for (std::size_t k = 1; k <= i; ++k)
        if (!d.coeffs_[k].is_zero()) acc = acc - d.coeffs_[k] * q.coeffs_[i - k];
      q.coeffs_[i] = acc / d.coeffs_[0];
    }
    return q;
  }

  // Multiplication by t; the result is known one order further.
  TruncatedSeries shift_up() const {
    TruncatedSeries r(order_ + 1);
    for (std::size_t i = 0; i <= order_; ++i) r.coeffs_[i + 1] = coeffs_[i];
    return r;
  }
  // Division by t; requires a zero constant term and loses one order.
  TruncatedSeries shift_down() const {
    if (!coeffs_[0].is_zero()) throw MathError("cannot divide by t: nonzero constant term");
    if (order_ == 0) throw MathError("cannot divide an order-0 series by t");
    return TruncatedSeries(std::vector<S>(coeffs_.begin() + 1, coeffs_.end()), order_ - 1);
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& o) {
    const std::size_t n = std::min(a.order_, o.order_);
    for (std::size_t i = 0; i <= n; ++i)
      if (!(a.coeffs_[i] == o.coeffs_[i])) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i <= order_; ++i) {
      if (i) out += ", ";
      out += coeffs_[i].to_string();
    }
    return out + ", O(t^" + std::to_string(order_ + 1) + ")";
  }

 private:
  void shrink_to(std::size_t order) {
    if (order < order_) {
      coeffs_.resize(order + 1);
      order_ = order;
    }
  }
  std::vector<S> coeffs_;
  std::size_t order_;
};

// Index of the first coefficient where the series differ on their common
// order, or -1 when equal.
template <Ring S>
long first_mismatch(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i)
    if (!(a[i] == b[i])) return static_cast<long>(i);
  return -1;
}

// outer(inner(t)); inner must have zero constant term.
template <Ring S>
TruncatedSeries<S> compose(const TruncatedSeries<S>& outer, const TruncatedSeries<S>& inner) {
  if (!inner[0].is_zero()) throw MathError("composition requires an inner series with zero constant term");
  const std::size_t n = std::min(outer.order(), inner.order());
  const TruncatedSeries<S> in = inner.truncated(n);
  TruncatedSeries<S> acc = TruncatedSeries<S>::constant(outer[n], n);
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * in;
    acc.set(0, acc[0] + outer[k]);
  }
  return acc;
}

// Compositional inverse g with f(g(t)) = t, solved order by order. A table of
// [t^m] g^k is grown alongside g so each step costs O(n^2) scalar operations.
template <Ring S>
TruncatedSeries<S> reversion(const TruncatedSeries<S>& f) {
  const std::size_t n = f.order();
  if (!f[0].is_zero()) throw MathError("reversion requires f(0) = 0");
  if (n < 1 || f[1].is_zero()) throw MathError("reversion requires an invertible linear coefficient");
  const S lead = f[1];
  // pw[k][m] = [t^m] g^k for 1 <= k <= m.
  std::vector<std::vector<S>> pw(n + 1, std::vector<S>(n + 1, S(0)));
  TruncatedSeries<S> g(n);
  for (std::size_t m = 1; m <= n; ++m) {
    S rest(0);
    for (std::size_t k = 2; k <= m; ++k) {
      S acc(0);
      for (std::size_t j = 1; j + k - 1 <= m; ++j)
        acc = acc + g[j] * pw[k - 1][m - j];
      pw[k][m] = acc;
      if (!f[k].is_zero()) rest = rest + f[k] * acc;
    }
    const S target = m == 1 ? S(1) : S(0);
    const S gm = (target - rest) / lead;
    g.set(m, gm);
    pw[1][m] = gm;
  }
  return g;
}

// Square root with constant term 1; the ring must contain 1/2.
template <Ring S>
TruncatedSeries<S> sqrt(const TruncatedSeries<S>& f) {
  if (!(f[0] == S(1))) throw MathError("series square root requires constant term 1");
  const std::size_t n = f.order();
  const S half = S(Rational(1, 2));
  TruncatedSeries<S> s(n);
  s.set(0, S(1));
  for (std::size_t m = 1; m <= n; ++m) {
    S acc = f[m];
    for (std::size_t k = 1; k < m; ++k) acc = acc - s[k] * s[m - k];
    s.set(m, acc * half);
  }
  return s;
}

// Expansion of numer(t)/denom(t) through t^order.
template <Ring S>
TruncatedSeries<S> rational_series(std::vector<S> numer, std::vector<S> denom, std::size_t order) {
  return TruncatedSeries<S>(std::move(numer), order) / TruncatedSeries<S>(std::move(denom), order);
}

}  // namespace lbp
