#pragma once

#include "lbp/bivar_poly.hpp"
#include "lbp/rational.hpp"

#include <ostream>
#include <string>

namespace lbp {

// Element of Q(b, c), the field of rational functions in the recurrence
// parameters.
//
// Canonical form: numerator and denominator share no nontrivial common factor
// and the denominator's leading term (lexicographic, b before c) has
// coefficient 1. Zero is 0/1. Equality is still decided by cross
// multiplication so it never depends on the reduction.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& r) : num_(r), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(BivarPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(BivarPoly num, BivarPoly den);

  static RationalFunction b() { return RationalFunction(BivarPoly::b()); }
  static RationalFunction c() { return RationalFunction(BivarPoly::c()); }

  const BivarPoly& numerator() const { return num_; }
  const BivarPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  // Throws MathError when the denominator vanishes at (b, c).
  Rational eval(const Rational& b, const Rational& c) const;

  RationalFunction inverse() const;
  RationalFunction pow(long e) const;

  // "num" for polynomials, "(num)/(den)" otherwise.
  std::string to_string() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& o) { return a += o; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& o) { return a -= o; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& o) { return a *= o; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& o) { return a /= o; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& o);

  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
    return os << r.to_string();
  }

 private:
  void normalize();
  BivarPoly num_;
  BivarPoly den_;
};

}  // namespace lbp
