#pragma once

// The orthogonal families attached to a constant-coefficient LBP family.
// With D(t) = 1 + (2b+c)t + b(b+c)t^2 their coefficient arrays are
//   Q     ((1+bt)^2/D, t/D)
//   Q~    ((1+bt)/D,   t/D)
//   Q^    (1/D,        t/D)
// and all three satisfy y_n = (x - (2b+c)) y_{n-1} - b(b+c) y_{n-2} from some
// point on.

#include "lbp/lbp.hpp"
#include "lbp/riordan.hpp"
#include "lbp/series.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lbp {

enum class OrthoKind { kQ, kQTilde, kQHat };

std::string_view to_string(OrthoKind k);
OrthoKind parse_ortho_kind(std::string_view name);

template <Field S>
TruncatedSeries<S> ortho_denominator(const S& b, const S& c, std::size_t order) {
  return TruncatedSeries<S>({S(1), S(2) * b + c, b * (b + c)}, order);
}

template <Field S>
RiordanArray<S> ortho_array(OrthoKind kind, const S& b, const S& c, std::size_t order) {
  const auto d = ortho_denominator(b, c, order);
  const auto one_plus_bt = TruncatedSeries<S>({S(1), b}, order);
  TruncatedSeries<S> numer = TruncatedSeries<S>::constant(S(1), order);
  if (kind == OrthoKind::kQ) numer = one_plus_bt * one_plus_bt;
  if (kind == OrthoKind::kQTilde) numer = one_plus_bt;
  return RiordanArray<S>(numer / d, TruncatedSeries<S>::variable(order) / d);
}

// Polynomial rows 0..n_max of the family, read from its coefficient array.
template <Field S>
std::vector<XPoly<S>> ortho_rows(OrthoKind kind, const S& b, const S& c, std::size_t n_max) {
  const auto m = ortho_array(kind, b, c, std::max<std::size_t>(n_max, 1)).materialize(n_max + 1);
  std::vector<XPoly<S>> rows;
  for (std::size_t n = 0; n <= n_max; ++n) rows.emplace_back(m.row(n));
  return rows;
}

// First n (>= 2) at which the three-term recurrence is expected to hold. Q's
// second row is fixed by its array rather than the recurrence (Q_2 differs from
// the recurrence value by b^2), so Q is checked from n = 3.
inline std::size_t ortho_recurrence_start(OrthoKind kind) { return kind == OrthoKind::kQ ? 3 : 2; }

// First n in [start, rows.size()) where the rows break
// y_n = (x - (2b+c)) y_{n-1} - b(b+c) y_{n-2}; -1 when none do.
template <Field S>
long ortho_recurrence_mismatch(const std::vector<XPoly<S>>& rows, const S& b, const S& c, std::size_t start) {
  const XPoly<S> shift = XPoly<S>::x() - XPoly<S>(S(2) * b + c);
  const XPoly<S> lambda(b * (b + c));
  for (std::size_t n = std::max<std::size_t>(start, 2); n < rows.size(); ++n)
    if (!(rows[n] == shift * rows[n - 1] - lambda * rows[n - 2])) return static_cast<long>(n);
  return -1;
}

struct IdentityCheck {
  std::string name;
  bool passed = false;
  long first_mismatch = -1;  // row (or coefficient index) of the first failure
};

// Entrywise comparison of the leading (order+1) blocks.
template <Field S>
IdentityCheck compare_arrays(std::string name, const RiordanArray<S>& lhs, const RiordanArray<S>& rhs) {
  IdentityCheck chk{std::move(name)};
  const auto mismatch = first_mismatch(lhs.materialize(), rhs.materialize());
  chk.passed = !mismatch.has_value();
  if (mismatch) chk.first_mismatch = static_cast<long>(mismatch->first);
  return chk;
}

// The four array factorizations of L = (1/(1+ct), t(1-bt)/(1+ct)):
//   L = (1, t/(1-bt)) O
//   L = B(b) O~
//   O = (1+bt, t) O~
//   L = (1/(1-bt)^2, t/(1-bt)) Q^-array
template <Field S>
std::vector<IdentityCheck> verify_factorizations(const S& b, const S& c, std::size_t order) {
  const auto L = lbp_coefficient_array(LbpFamily<S>::constant(b, c), order);
  const auto O = ortho_array(OrthoKind::kQ, b, c, order);
  const auto Ot = ortho_array(OrthoKind::kQTilde, b, c, order);
  const auto Qh = ortho_array(OrthoKind::kQHat, b, c, order);
  const auto one = TruncatedSeries<S>::constant(S(1), order);
  const auto t = TruncatedSeries<S>::variable(order);
  const auto one_minus_bt = TruncatedSeries<S>({S(1), -b}, order);
  const RiordanArray<S> shift_bt(one, t / one_minus_bt);
  const RiordanArray<S> one_plus_bt(TruncatedSeries<S>({S(1), b}, order), t);
  const RiordanArray<S> hat_factor(one / (one_minus_bt * one_minus_bt), t / one_minus_bt);
  return {
      compare_arrays("L = (1, t/(1-bt)) * O", L, shift_bt * O),
      compare_arrays("L = B(b) * O~", L, binomial_array(b, order) * Ot),
      compare_arrays("O = (1+bt, t) * O~", O, one_plus_bt * Ot),
      compare_arrays("L = (1/(1-bt)^2, t/(1-bt)) * Q^", L, hat_factor * Qh),
  };
}

// P_n = sum_k weight(n, k) b^(n-k) y_k for the polynomial transforms:
//   Q~: weight binom(n, k);  Q: binom(n-1, n-k);  Q^: binom(n+1, k+1).
template <Field S>
std::vector<IdentityCheck> verify_polynomial_transforms(const S& b, const S& c, std::size_t n_max) {
  const auto P = lbp_rows_by_recurrence(LbpFamily<S>::constant(b, c), n_max);
  struct Case {
    const char* name;
    OrthoKind kind;
    BigInt (*weight)(long, long);
  };
  const Case cases[] = {
      {"P_n = sum binom(n,k) b^(n-k) Q~_k", OrthoKind::kQTilde, [](long n, long k) { return binomial(n, k); }},
      {"P_n = sum binom(n-1,n-k) b^(n-k) Q_k", OrthoKind::kQ, [](long n, long k) { return binomial(n - 1, n - k); }},
      {"P_n = sum binom(n+1,k+1) b^(n-k) Q^_k", OrthoKind::kQHat, [](long n, long k) { return binomial(n + 1, k + 1); }},
  };
  std::vector<IdentityCheck> out;
  for (const auto& cs : cases) {
    const auto Y = ortho_rows(cs.kind, b, c, n_max);
    IdentityCheck chk{cs.name, true, -1};
    for (std::size_t n = 0; n <= n_max && chk.passed; ++n) {
      XPoly<S> sum;
      for (std::size_t k = 0; k <= n; ++k)
        sum += XPoly<S>(S(Rational(cs.weight(static_cast<long>(n), static_cast<long>(k)))) * power(b, static_cast<long>(n - k))) * Y[k];
      if (!(sum == P[n])) {
        chk.passed = false;
        chk.first_mismatch = static_cast<long>(n);
      }
    }
    out.push_back(std::move(chk));
  }
  return out;
}

}  // namespace lbp
