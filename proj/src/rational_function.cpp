#include "lbp/rational_function.hpp"

#include "lbp/errors.hpp"

namespace lbp {

RationalFunction::RationalFunction(BivarPoly num, BivarPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = BivarPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    if (auto q = divide_exact(num_, den_)) {
      num_ = std::move(*q);
      den_ = BivarPoly(1);
      return;
    }
    const BivarPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  const Rational lead = den_.leading_term().second;
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::eval(const Rational& b, const Rational& c) const {
  const Rational d = den_.eval(b, c);
  if (d.is_zero()) throw MathError("rational function has a pole at the evaluation point");
  return num_.eval(b, c) / d;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw MathError("inverse of zero");
  RationalFunction r;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction result(1);
  RationalFunction base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!is_polynomial()) normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  if (is_polynomial() && o.is_polynomial()) {
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = BivarPoly(1);
    return *this;
  }
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw MathError("division by zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& o) {
  if (a.den_ == o.den_) return a.num_ == o.num_;
  return a.num_ * o.den_ == o.num_ * a.den_;
}

}  // namespace lbp
