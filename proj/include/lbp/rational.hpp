#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace lbp {

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "7", "-3/2", "+4/6"; throws UsageError otherwise.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational inverse() const;
  Rational pow(long e) const;
  Rational abs() const { return Rational(::abs(v_)); }

  std::string to_string() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  mpq_class v_;
};

}  // namespace lbp
