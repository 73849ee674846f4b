#include "lbp/scalar.hpp"

#include "lbp/errors.hpp"

namespace lbp {

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  if (n >= 0) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  // binom(n, k) = (-1)^k binom(k - n - 1, k) for negative n.
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
  return (k % 2 == 0) ? r : BigInt(-r);
}

BigInt catalan(long n) {
  if (n < 0) throw MathError("catalan number of negative index");
  BigInt r = binomial(2 * n, n);
  return r / (n + 1);
}

}  // namespace lbp
