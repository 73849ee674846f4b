#pragma once

#include "lbp/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace lbp {

// Polynomial in the two recurrence parameters b and c with rational
// coefficients. Terms are keyed by (exponent of b, exponent of c); no zero
// coefficient is ever stored. The leading term is the lexicographically
// largest key (b before c).
class BivarPoly {
 public:
  using Exponents = std::pair<std::uint32_t, std::uint32_t>;
  using Terms = std::map<Exponents, Rational>;

  BivarPoly() = default;
  BivarPoly(long n) : BivarPoly(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  BivarPoly(const Rational& r);                   // NOLINT(google-explicit-constructor)

  static BivarPoly monomial(const Rational& coeff, std::uint32_t b_exp, std::uint32_t c_exp);
  static BivarPoly b() { return monomial(1, 1, 0); }
  static BivarPoly c() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(std::uint32_t b_exp, std::uint32_t c_exp) const;
  std::uint32_t degree_b() const;
  std::uint32_t degree_c() const;
  std::uint32_t total_degree() const;

  // Requires a nonzero polynomial.
  std::pair<Exponents, Rational> leading_term() const;

  Rational eval(const Rational& b, const Rational& c) const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const Rational& k);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& o) { return a += o; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& o) { return a -= o; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& o);
  friend BivarPoly operator*(BivarPoly a, const Rational& k) { return a *= k; }
  BivarPoly operator-() const;

  friend bool operator==(const BivarPoly& a, const BivarPoly& o) { return a.terms_ == o.terms_; }

  // Monomials by descending total degree, then descending power of b; for
  // example "b^2+3*b*c-1/2*c^2+c".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& coeff);
  Terms terms_;
};

// Quotient when `divisor` divides `dividend` exactly, std::nullopt otherwise.
std::optional<BivarPoly> divide_exact(const BivarPoly& dividend, const BivarPoly& divisor);

// Greatest common divisor, normalized to leading coefficient 1; gcd(0, 0) = 0.
BivarPoly gcd(const BivarPoly& a, const BivarPoly& b);

}  // namespace lbp
