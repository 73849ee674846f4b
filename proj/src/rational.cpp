#include "lbp/rational.hpp"

#include "lbp/errors.hpp"

#include <cctype>

namespace lbp {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw MathError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(text, num)
                      : parse_integer(text.substr(0, slash), num) &&
                            parse_integer(text.substr(slash + 1), den) &&
                            text[slash + 1] != '-' && text[slash + 1] != '+';
  if (!ok) throw UsageError("cannot parse rational '" + std::string(text) + "'");
  if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw MathError("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError("division by zero");
  v_ /= o.v_;
  return *this;
}

}  // namespace lbp
