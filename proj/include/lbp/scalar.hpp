#pragma once

#include "lbp/rational.hpp"
#include "lbp/rational_function.hpp"

#include <concepts>
#include <string>

namespace lbp {

// Commutative ring with exact equality. Division is partial: it must succeed
// whenever the divisor is a unit and throw MathError otherwise.
template <class S>
concept Ring = std::regular<S> && std::constructible_from<S, long> &&
               std::constructible_from<S, const Rational&> &&
               requires(const S& a, const S& b) {
                 { a + b } -> std::convertible_to<S>;
                 { a - b } -> std::convertible_to<S>;
                 { a * b } -> std::convertible_to<S>;
                 { a / b } -> std::convertible_to<S>;
                 { -a } -> std::convertible_to<S>;
                 { a.is_zero() } -> std::convertible_to<bool>;
                 { a.to_string() } -> std::convertible_to<std::string>;
               };

// A Ring where every nonzero element is a unit: Rational and RationalFunction.
template <class S>
concept Field = Ring<S> && requires(const S& a) {
  { a.inverse() } -> std::convertible_to<S>;
};

template <Ring S>
S power(const S& base, long e) {
  S result(1);
  S b = base;
  if (e < 0) {
    b = S(1) / b;
    e = -e;
  }
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

// Generalized binomial coefficient: binom(n, k) = n(n-1)...(n-k+1)/k! for any
// integer n, zero for k < 0. So binom(-1, 0) = 1 and binom(3, 5) = 0.
BigInt binomial(long n, long k);
BigInt catalan(long n);

// Scalar-ring valued helpers.
template <Ring S>
S binom(long n, long k) {
  return S(Rational(binomial(n, k)));
}

template <Ring S>
S kronecker_zero(long n) {
  return n == 0 ? S(1) : S(0);
}

}  // namespace lbp
