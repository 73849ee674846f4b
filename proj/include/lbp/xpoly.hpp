#pragma once

#include "lbp/errors.hpp"
#include "lbp/scalar.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace lbp {

// Univariate polynomial in the formal variable x over a scalar ring, stored by
// ascending power with no trailing zeros. Houses the rows P_n(x), Q_n(x).
template <Ring S>
class XPoly {
 public:
  XPoly() = default;
  XPoly(long n) : XPoly(S(n)) {}                 // NOLINT(google-explicit-constructor)
  XPoly(const S& s) : coeffs_{s} { trim(); }     // NOLINT(google-explicit-constructor)
  explicit XPoly(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static XPoly x() { return XPoly(std::vector<S>{S(0), S(1)}); }

  const std::vector<S>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  S coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : S(0); }
  S leading() const { return coeffs_.empty() ? S(0) : coeffs_.back(); }

  S eval(const S& at) const {
    S acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  XPoly& operator+=(const XPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), S(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  XPoly& operator-=(const XPoly& o) { return *this += -o; }
  friend XPoly operator+(XPoly a, const XPoly& o) { return a += o; }
  friend XPoly operator-(XPoly a, const XPoly& o) { return a -= o; }
  friend XPoly operator*(const XPoly& a, const XPoly& o) {
    if (a.is_zero() || o.is_zero()) return XPoly();
    std::vector<S> r(a.coeffs_.size() + o.coeffs_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        r[i + j] = r[i + j] + a.coeffs_[i] * o.coeffs_[j];
    return XPoly(std::move(r));
  }
  // Division is only defined by constant polynomials whose value is a unit.
  friend XPoly operator/(const XPoly& a, const XPoly& o) {
    if (!o.is_constant() || o.is_zero())
      throw MathError("polynomial in x divided by a non-constant or zero polynomial");
    std::vector<S> r = a.coeffs_;
    for (auto& v : r) v = v / o.coeffs_[0];
    return XPoly(std::move(r));
  }
  XPoly operator-() const {
    std::vector<S> r = coeffs_;
    for (auto& v : r) v = -v;
    return XPoly(std::move(r));
  }
  friend bool operator==(const XPoly& a, const XPoly& o) { return a.coeffs_ == o.coeffs_; }

  // Ascending list "[a0, a1, ...]" of the coefficient strings.
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) out += ", ";
      out += coeffs_[i].to_string();
    }
    return out + "]";
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<S> coeffs_;
};

}  // namespace lbp
