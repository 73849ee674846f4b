#include "lbp/scenarios.hpp"

#include "lbp/cfrac.hpp"
#include "lbp/errors.hpp"
#include "lbp/hankel_toeplitz.hpp"
#include "lbp/lbp.hpp"
#include "lbp/orthopoly.hpp"
#include "lbp/rational_function.hpp"
#include "lbp/riordan.hpp"

#include <functional>
#include <future>
#include <map>

namespace lbp {
namespace {

using RF = RationalFunction;

const RF& sym_b() {
  static const RF b = RF::b();
  return b;
}
const RF& sym_c() {
  static const RF c = RF::c();
  return c;
}

template <class T>
Rational big(const T& v) {
  return Rational(BigInt(v));
}

// Large Schroeder numbers by sum_k binom(n+k, 2k) C_k.
BigInt schroeder(long n) {
  BigInt s = 0;
  for (long k = 0; k <= n; ++k) s += binomial(n + k, 2 * k) * catalan(k);
  return s;
}

template <class S>
Check seq_check(std::string name, const std::vector<S>& got, const std::vector<S>& want) {
  Check chk{std::move(name), true, -1, {}};
  const std::size_t n = std::min(got.size(), want.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(got[i] == want[i])) {
      chk.passed = false;
      chk.first_mismatch = static_cast<long>(i);
      chk.detail = "got " + got[i].to_string() + ", expected " + want[i].to_string();
      return chk;
    }
  }
  if (got.size() < want.size()) {
    chk.passed = false;
    chk.first_mismatch = static_cast<long>(n);
    chk.detail = "only " + std::to_string(got.size()) + " of " + std::to_string(want.size()) + " terms produced";
  }
  return chk;
}

template <class S>
Check series_check(std::string name, const TruncatedSeries<S>& got, const TruncatedSeries<S>& want) {
  const std::size_t n = std::min(got.order(), want.order());
  return seq_check(std::move(name), got.truncated(n).coefficients(), want.truncated(n).coefficients());
}

template <class S>
Check matrix_check(std::string name, const Matrix<S>& got, const Matrix<S>& want) {
  Check chk{std::move(name), true, -1, {}};
  if (got.rows() != want.rows() || got.cols() != want.cols()) {
    chk.passed = false;
    chk.first_mismatch = 0;
    chk.detail = "shape " + std::to_string(got.rows()) + "x" + std::to_string(got.cols()) + ", expected " +
                 std::to_string(want.rows()) + "x" + std::to_string(want.cols());
    return chk;
  }
  if (const auto mm = first_mismatch(got, want)) {
    const auto [i, j] = *mm;
    chk.passed = false;
    chk.first_mismatch = static_cast<long>(i);
    chk.detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + "): got " + got(i, j).to_string() + ", expected " +
                 want(i, j).to_string();
  }
  return chk;
}

template <class S>
Check lower_check(std::string name, const LowerTriangularMatrix<S>& got, const LowerTriangularMatrix<S>& want) {
  return matrix_check(std::move(name), got.to_dense(), want.to_dense());
}

Check bool_check(std::string name, bool ok, std::string detail = {}) {
  return Check{std::move(name), ok, ok ? -1 : 0, ok ? std::string() : std::move(detail)};
}

Check from_identity(const IdentityCheck& c) { return Check{c.name, c.passed, c.first_mismatch, {}}; }

// Integer table -> lower-triangular matrix, each entry scaled by weight(n, k).
template <class S, std::size_t D>
LowerTriangularMatrix<S> table(const long (&t)[D][D], const std::function<S(long, long)>& weight) {
  LowerTriangularMatrix<S> m(D);
  for (std::size_t n = 0; n < D; ++n)
    for (std::size_t k = 0; k <= n; ++k) m.set(n, k, S(t[n][k]) * weight(static_cast<long>(n), static_cast<long>(k)));
  return m;
}

// Coefficients in c of a polynomial rational function (b specialized away).
std::vector<Rational> c_coefficients(const RF& f, std::size_t width) {
  std::vector<Rational> out(width);
  if (!f.is_polynomial()) throw MathError("expected a polynomial in c, got " + f.to_string());
  const Rational scale = f.denominator().coefficient(0, 0).inverse();
  for (std::size_t k = 0; k < width; ++k) out[k] = f.numerator().coefficient(0, static_cast<std::uint32_t>(k)) * scale;
  return out;
}

std::vector<Check> moment_checks(std::size_t order) {
  const RF& b = sym_b();
  const RF& c = sym_c();
  const auto fam = LbpFamily<RF>::constant(b, c);
  std::vector<Check> out;
  const auto reference = moments(fam, MomentRoute::kMatrixInverse, order);
  out.push_back(seq_check("moments begin 1, c, c(b+c), c(b+c)(2b+c), c(b+c)(5b^2+5bc+c^2)",
                          std::vector<RF>(reference.values.begin(), reference.values.begin() + 5),
                          std::vector<RF>{RF(1), c, c * (b + c), c * (b + c) * (RF(2) * b + c),
                                          c * (b + c) * (RF(5) * b * b + RF(5) * b * c + c * c)}));
  for (auto route : kAllMomentRoutes) {
    if (route == MomentRoute::kMatrixInverse) continue;
    out.push_back(seq_check("route " + std::string(to_string(route)) + " = matrix_inverse", moments(fam, route, order).values,
                            reference.values));
  }
  const auto numeric = moments(LbpFamily<Rational>::constant(Rational(1), Rational(1)), MomentRoute::kCatalanSum, 9);
  std::vector<Rational> want;
  for (long v : {1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586}) want.emplace_back(v);
  out.push_back(seq_check("b = c = 1 moments 1,1,2,6,22,90,...,41586", numeric.values, want));
  const auto rows = lbp_rows_by_recurrence(fam, 6);
  const auto gf_rows = lbp_rows_by_generating_function(b, c, 6);
  out.push_back(seq_check("P_n by recurrence = P_n by bivariate generating function", rows, gf_rows));
  out.push_back(lower_check("coefficient array (1/(1+ct), t(1-bt)/(1+ct)) = recurrence rows",
                            lbp_coefficient_array(fam, 8).materialize(), lbp_coefficient_matrix(fam, 8)));
  return out;
}

std::vector<Check> example1(std::size_t order) {
  const RF& c = sym_c();
  const RF one(1);
  std::vector<Check> out;
  const auto mt = tfraction_closed_form(one, c, order);
  out.push_back(seq_check("mu~ begins 1, c+1, (c+1)(c+2), (c+1)(c^2+5c+5), (c+1)(c^3+9c^2+21c+14)",
                          std::vector<RF>(mt.coefficients().begin(), mt.coefficients().begin() + 5),
                          std::vector<RF>{one, c + one, (c + one) * (c + RF(2)), (c + one) * (c * c + RF(5) * c + RF(5)),
                                          (c + one) * (c * c * c + RF(9) * c * c + RF(21) * c + RF(14))}));

  static const long peaks[7][7] = {{1},
                                   {1, 1},
                                   {2, 3, 1},
                                   {5, 10, 6, 1},
                                   {14, 35, 30, 10, 1},
                                   {42, 126, 140, 70, 15, 1},
                                   {132, 462, 630, 420, 140, 21, 1}};
  LowerTriangularMatrix<Rational> tri(7);
  for (std::size_t n = 0; n < 7; ++n) {
    const auto row = c_coefficients(mt[n], n + 1);
    for (std::size_t k = 0; k <= n; ++k) tri.set(n, k, row[k]);
  }
  out.push_back(lower_check("coefficients of mu~ in c = displayed triangle", tri,
                            table<Rational>(peaks, [](long, long) { return Rational(1); })));
  {
    LowerTriangularMatrix<Rational> formula(order + 1);
    LowerTriangularMatrix<Rational> got(order + 1);
    for (long n = 0; n <= static_cast<long>(order); ++n) {
      const auto row = c_coefficients(mt[n], n + 1);
      for (long k = 0; k <= n; ++k) {
        formula.set(n, k, big(binomial(2 * n - k, k) * catalan(n - k)));
        got.set(n, k, row[k]);
      }
    }
    out.push_back(lower_check("mu~ coefficients = binom(2n-k,k) C_{n-k} to order " + std::to_string(order), got, formula));
  }
  const auto uv = verify_uv_equality(c, order);
  out.push_back(Check{uv.name, uv.passed, uv.first_mismatch, {}});

  // Orthogonal-polynomial arrays for b = 1.
  const auto den = TruncatedSeries<RF>({one, c + RF(2), c + one}, order);
  const auto t = TruncatedSeries<RF>::variable(order);
  const RiordanArray<RF> qt_expected(TruncatedSeries<RF>({one, one}, order) / den, t / den);
  const RiordanArray<RF> q_expected(TruncatedSeries<RF>({one, RF(2), one}, order) / den, t / den);
  out.push_back(from_identity(compare_arrays("Q~ array = ((1+t)/(1+(c+2)t+(c+1)t^2), t/(...))",
                                             ortho_array(OrthoKind::kQTilde, one, c, order), qt_expected)));
  out.push_back(from_identity(
      compare_arrays("Q array = ((1+t)^2/(1+(c+2)t+(c+1)t^2), t/(...))", ortho_array(OrthoKind::kQ, one, c, order), q_expected)));
  out.push_back(series_check("first column of Q~ array inverse = mu~", qt_expected.inverse().g(), mt));
  const auto mu = moments(LbpFamily<RF>::constant(one, c), MomentRoute::kMatrixInverse, order);
  out.push_back(seq_check("mu begins 1, c, c(c+1), c(c+1)(c+2), c(c+1)(c^2+5c+5)",
                          std::vector<RF>(mu.values.begin(), mu.values.begin() + 5),
                          std::vector<RF>{one, c, c * (c + one), c * (c + one) * (c + RF(2)),
                                          c * (c + one) * (c * c + RF(5) * c + RF(5))}));
  out.push_back(seq_check("first column of Q array inverse = mu", q_expected.inverse().g().coefficients(), mu.values));

  // c = 1: large Schroeder numbers.
  std::vector<Rational> s_want;
  std::vector<Rational> s_got;
  for (long n = 0; n <= static_cast<long>(order); ++n) {
    s_want.push_back(big(schroeder(n)));
    s_got.push_back(mt[n].eval(Rational(1), Rational(1)));
  }
  out.push_back(seq_check("c = 1: mu~_n = S_n (large Schroeder)", s_got, s_want));
  std::vector<Rational> s_prefix;
  for (long v : {1, 2, 6, 22, 90, 394, 1806, 8558, 41586}) s_prefix.emplace_back(v);
  out.push_back(seq_check("c = 1: mu~ begins 1,2,6,22,90,394,1806,8558,41586", s_got, s_prefix));
  return out;
}

std::vector<Check> example2(std::size_t) {
  const RF& b = sym_b();
  const RF& c = sym_c();
  std::vector<Check> out;

  const auto L = lbp_coefficient_array(LbpFamily<RF>::constant(b, c), 6);
  const auto P_moment = production_matrix(L.inverse().materialize());
  const RF bc = b + c;
  const RF z(0);
  const RF u(1);
  const Matrix<RF> displayed = {
      {c, u, z, z, z, z},
      {b * c, bc, u, z, z, z},
      {b * b * c, b * bc, bc, u, z, z},
      {power(b, 3) * c, b * b * bc, b * bc, bc, u, z},
      {power(b, 4) * c, power(b, 3) * bc, b * b * bc, b * bc, bc, u},
      {power(b, 5) * c, power(b, 4) * bc, power(b, 3) * bc, b * b * bc, b * bc, bc},
  };
  out.push_back(matrix_check("symbolic production matrix of the moment array = displayed", P_moment, displayed));
  out.push_back(bool_check("column-shift test passes on the moment array's production matrix",
                           !column_shift_violation(P_moment).has_value()));
  const auto P_coeff = production_matrix(L.materialize());
  out.push_back(bool_check("column-shift test passes on L's production matrix", !column_shift_violation(P_coeff).has_value()));

  const LbpFamily<Rational> periodic({Rational(1), Rational(2)}, {Rational(1)});
  const auto M = lbp_moment_matrix(periodic, 7);
  static const long moments_table[8][8] = {{1},
                                           {1, 1},
                                           {3, 4, 1},
                                           {13, 18, 6, 1},
                                           {65, 91, 34, 9, 1},
                                           {355, 500, 199, 64, 11, 1},
                                           {2061, 2914, 1206, 430, 90, 14, 1},
                                           {12501, 17721, 7526, 2856, 670, 135, 16, 1}};
  out.push_back(lower_check("periodic b = 1,2,1,2,...; c = 1 moment matrix = displayed 8x8 table", M,
                            table<Rational>(moments_table, [](long, long) { return Rational(1); })));
  const auto P = production_matrix(M);
  static const long prod_table[7][7] = {{1, 1, 0, 0, 0, 0, 0}, {2, 3, 1, 0, 0, 0, 0}, {2, 3, 2, 1, 0, 0, 0}, {4, 6, 4, 3, 1, 0, 0},
                                        {4, 6, 4, 3, 2, 1, 0}, {8, 12, 8, 6, 4, 3, 1}, {8, 12, 8, 6, 4, 3, 2}};
  Matrix<Rational> prod_expected(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) prod_expected(i, j) = Rational(prod_table[i][j]);
  out.push_back(matrix_check("periodic production matrix = displayed 7x7 block", P, prod_expected));
  const auto violation = column_shift_violation(P);
  out.push_back(bool_check("column-shift test fails on the periodic production matrix", violation.has_value(),
                           "no violation found; the periodic moment matrix looked Riordan"));

  const auto col = M.column(0);
  std::vector<Rational> shifted(col.begin() + 1, col.end());
  std::vector<Rational> a155867;
  for (long v : {1, 3, 13, 65, 355, 2061}) a155867.emplace_back(v);
  out.push_back(seq_check("mu_{n+1} begins 1,3,13,65,355,2061", shifted, a155867));
  std::vector<Rational> formula;
  for (long n = 0; n < static_cast<long>(shifted.size()); ++n) {
    BigInt s = 0;
    for (long k = 0; k <= n; ++k) s += binomial(n + k, 2 * k) * schroeder(k);
    formula.push_back(big(s));
  }
  out.push_back(seq_check("mu_{n+1} = sum_k binom(n+k,2k) S_k", shifted, formula));
  return out;
}

std::vector<Check> example3(std::size_t) {
  const RF& c = sym_c();
  const RF one(1);
  std::vector<Check> out;
  const auto mu = moments(LbpFamily<RF>::constant(c - one, c), MomentRoute::kMatrixInverse, 5);
  const RF two_c = RF(2) * c - one;
  out.push_back(seq_check(
      "b = c-1 moments begin 1, c, c(2c-1), c(2c-1)(3c-2), ...", mu.values,
      std::vector<RF>{one, c, c * two_c, c * two_c * (RF(3) * c - RF(2)),
                      c * two_c * (RF(11) * c * c - RF(15) * c + RF(5)),
                      c * two_c * (RF(45) * power(c, 3) - RF(93) * c * c + RF(63) * c - RF(14))}));
  static const long signed_table[6][6] = {{1}, {0, 1}, {0, -1, 2}, {0, 2, -7, 6}, {0, -5, 25, -41, 22}, {0, 14, -91, 219, -231, 90}};
  LowerTriangularMatrix<Rational> tri(6);
  LowerTriangularMatrix<Rational> formula(6);
  std::vector<Rational> sums;
  for (long n = 0; n < 6; ++n) {
    const auto row = c_coefficients(mu[n], n + 1);
    Rational s;
    for (long k = 0; k <= n; ++k) {
      tri.set(n, k, row[k]);
      s += row[k];
      BigInt f = 0;
      for (long j = 0; j <= n; ++j) f += binomial(n + j - 1, 2 * j) * binomial(j, n - k) * catalan(j);
      formula.set(n, k, big((n - k) % 2 ? BigInt(-f) : f));
    }
    sums.push_back(s);
  }
  out.push_back(lower_check("b = c-1 coefficient triangle = displayed 6x6", tri,
                            table<Rational>(signed_table, [](long, long) { return Rational(1); })));
  out.push_back(lower_check("b = c-1 triangle = (-1)^(n-k) sum_j binom(n+j-1,2j) binom(j,n-k) C_j", tri, formula));
  out.push_back(seq_check("b = c-1 row sums all 1", sums, std::vector<Rational>(6, Rational(1))));

  const auto mu_plus = moments(LbpFamily<RF>::constant(c + one, c), MomentRoute::kMatrixInverse, 5);
  LowerTriangularMatrix<Rational> utri(6);
  std::vector<Rational> usums;
  for (long n = 0; n < 6; ++n) {
    const auto row = c_coefficients(mu_plus[n], n + 1);
    Rational s;
    for (long k = 0; k <= n; ++k) {
      utri.set(n, k, row[k]);
      s += row[k];
    }
    usums.push_back(s);
  }
  out.push_back(lower_check("b = c+1 coefficient triangle = unsigned 6x6", utri,
                            table<Rational>(signed_table, [](long n, long k) { return Rational((n - k) % 2 ? -1 : 1); })));
  std::vector<Rational> sum_want;
  for (long v : {1, 1, 3, 15, 93, 645}) sum_want.emplace_back(v);
  out.push_back(seq_check("b = c+1 row sums 1,1,3,15,93,645", usums, sum_want));

  const auto rev = reversion(TruncatedSeries<Rational>({Rational(0), Rational(1), Rational(-2)}, 6) /
                             TruncatedSeries<Rational>({Rational(1), Rational(1)}, 6));
  std::vector<Rational> rev_want;
  for (long v : {0, 1, 3, 15, 93, 645}) rev_want.emplace_back(v);
  out.push_back(seq_check("reversion of t(1-2t)/(1+t) begins 0,1,3,15,93,645",
                          std::vector<Rational>(rev.coefficients().begin(), rev.coefficients().begin() + 6), rev_want));
  out.push_back(seq_check("reversion coefficients = b = c+1 row sums (shifted)",
                          std::vector<Rational>(rev.coefficients().begin() + 1, rev.coefficients().begin() + 6),
                          std::vector<Rational>(usums.begin() + 1, usums.end())));
  return out;
}

std::vector<Check> example4(std::size_t order) {
  const RF& c = sym_c();
  std::vector<Check> out;
  const auto fam = LbpFamily<RF>::constant(c, c);
  const auto scale = [&](long n, long k) { return power(c, n - k); };
  static const long delannoy[6][6] = {{1}, {-1, 1}, {1, -3, 1}, {-1, 5, -5, 1}, {1, -7, 13, -7, 1}, {-1, 9, -25, 25, -9, 1}};
  out.push_back(lower_check("b = c coefficient array = signed Delannoy triangle scaled by c^(n-k)",
                            lbp_coefficient_array(fam, 5).materialize(), table<RF>(delannoy, scale)));
  static const long moment_table[6][6] = {{1}, {1, 1}, {2, 3, 1}, {6, 10, 5, 1}, {22, 38, 22, 7, 1}, {90, 158, 98, 38, 9, 1}};
  out.push_back(lower_check("b = c moment matrix = displayed 6x6", lbp_moment_matrix(fam, 5), table<RF>(moment_table, scale)));

  const auto mu = moments(fam, MomentRoute::kGfExpansion, order);
  std::vector<RF> want{RF(1)};
  for (long n = 1; n <= static_cast<long>(order); ++n) want.push_back(RF(big(schroeder(n - 1))) * power(c, n));
  out.push_back(seq_check("b = c moments mu_n = c^n S_{n-1} for n >= 1", mu.values, want));
  return out;
}

std::vector<Check> factorization_checks(std::size_t) {
  const RF& b = sym_b();
  const RF& c = sym_c();
  const RF one(1);
  const auto x = XPoly<RF>::x();
  std::vector<Check> out;
  for (const auto& chk : verify_factorizations(b, c, 6)) out.push_back(from_identity(chk));
  for (const auto& chk : verify_polynomial_transforms(b, c, 6)) out.push_back(from_identity(chk));

  const auto Q = ortho_rows(OrthoKind::kQ, b, c, 6);
  out.push_back(seq_check("Q_0, Q_1, Q_2 = 1, x-c, x^2-2(b+c)x+c(b+c)", std::vector<XPoly<RF>>(Q.begin(), Q.begin() + 3),
                          std::vector<XPoly<RF>>{XPoly<RF>(one), x - XPoly<RF>(c),
                                                 x * x - XPoly<RF>(RF(2) * (b + c)) * x + XPoly<RF>(c * (b + c))}));
  for (auto kind : {OrthoKind::kQ, OrthoKind::kQTilde, OrthoKind::kQHat}) {
    const auto rows = ortho_rows(kind, b, c, 8);
    const std::size_t start = ortho_recurrence_start(kind);
    const long mm = ortho_recurrence_mismatch(rows, b, c, start);
    out.push_back(Check{std::string(to_string(kind)) + " three-term recurrence (2b+c, b(b+c)) from n = " + std::to_string(start),
                        mm < 0, mm, {}});
  }
  const auto mu = moments(LbpFamily<RF>::constant(b, c), MomentRoute::kCatalanSum, 8);
  out.push_back(seq_check("first column of Q array inverse = mu",
                          ortho_array(OrthoKind::kQ, b, c, 8).inverse().g().coefficients(), mu.values));
  std::vector<RF> cmt;
  const auto Ot = ortho_array(OrthoKind::kQTilde, b, c, 8).inverse().g();
  for (std::size_t n = 0; n < 8; ++n) cmt.push_back(c * Ot[n]);
  out.push_back(seq_check("c * first column of Q~ array inverse = shifted mu", cmt,
                          std::vector<RF>(mu.values.begin() + 1, mu.values.end())));
  return out;
}

std::vector<Check> hankel_checks(std::size_t order) {
  const RF& b = sym_b();
  const RF& c = sym_c();
  std::vector<Check> out;
  const auto mu = moments(LbpFamily<RF>::constant(b, c), MomentRoute::kCatalanSum, order);
  const std::size_t n_max = std::min<std::size_t>(5, order / 2);
  const auto h = hankel_transform(mu, n_max);
  std::vector<RF> closed;
  for (long n = 0; n <= static_cast<long>(n_max); ++n) closed.push_back(power(b * c, n) * power(b * (b + c), n * (n - 1) / 2));
  out.push_back(seq_check("h_n = (bc)^n (b(b+c))^binom(n,2) for n <= " + std::to_string(n_max), h, closed));
  const auto j = jfraction_from_moments(mu);
  std::vector<RF> heil;
  for (std::size_t n = 0; n <= n_max; ++n) heil.push_back(hankel_from_jfraction(j.sub, n));
  out.push_back(seq_check("h_n = prod of J-fraction lambda powers", h, heil));

  const auto numeric = moments(LbpFamily<Rational>::constant(Rational(1), Rational(1)), MomentRoute::kCatalanSum, 2 * n_max);
  std::vector<Rational> h11_want;
  for (long n = 0; n <= static_cast<long>(n_max); ++n) h11_want.push_back(Rational(2).pow(n * (n - 1) / 2));
  out.push_back(seq_check("b = c = 1: h_n = 2^binom(n,2)", hankel_transform(numeric, n_max), h11_want));
  return out;
}

std::vector<Check> toeplitz_checks(std::size_t order) {
  const RF& b = sym_b();
  const RF& c = sym_c();
  std::vector<Check> out;
  const std::size_t n_max = std::min<std::size_t>(5, order - 2);
  const auto mu = moments(LbpFamily<RF>::constant(b, c), MomentRoute::kCatalanSum, std::max(order, n_max + 2));
  const auto bm = extend_moments(mu, c, n_max + 1);
  out.push_back(seq_check("mu_{-1} = (b+c)/c^2, mu_{-2} = (b+c)(2b+c)/c^4", std::vector<RF>{bm.at(-1), bm.at(-2)},
                          std::vector<RF>{(b + c) / (c * c), (b + c) * (RF(2) * b + c) / power(c, 4)}));
  const auto td = toeplitz_dets(bm, n_max);
  std::vector<RF> closed;
  for (long n = 0; n <= static_cast<long>(n_max); ++n) closed.push_back(power(-b / c, n * (n + 1) / 2));
  out.push_back(seq_check("t_n = (-b/c)^binom(n+1,2) for n <= " + std::to_string(n_max), td.t, closed));
  for (std::size_t n = 1; n + 1 <= n_max && n <= 4; ++n) {
    const auto [rb, rc] = recover_parameters(td, n);
    out.push_back(seq_check("recover (b, c) from Toeplitz determinants at n = " + std::to_string(n), std::vector<RF>{rb, rc},
                            std::vector<RF>{b, c}));
  }
  const auto rows = lbp_rows_by_recurrence(LbpFamily<RF>::constant(b, c), n_max);
  std::vector<XPoly<RF>> det_rows;
  for (std::size_t n = 0; n <= n_max; ++n) det_rows.push_back(lbp_by_determinant(bm, n));
  out.push_back(seq_check("determinantal P_n = recurrence P_n for n <= " + std::to_string(n_max), det_rows, rows));
  return out;
}

std::vector<Check> cfrac_checks(std::size_t order) {
  const RF& b = sym_b();
  const RF& c = sym_c();
  std::vector<Check> out;
  const auto gf = detail::moment_generating_function(b, c, order);
  out.push_back(series_check("S-fraction (c, b, b+c, b, b+c, ...) = closed form", cf_expand(lbp_sfraction(b, c, order), order), gf));
  out.push_back(series_check("J-fraction (c, 2b+c, ...; bc, b(b+c), ...) = closed form", cf_expand(lbp_jfraction(b, c, order), order), gf));
  const auto mt = cf_expand(lbp_tfraction(b, c, order), order);
  const auto one = TruncatedSeries<RF>::constant(RF(1), order);
  out.push_back(series_check("1 + c t T-fraction = closed form", one + c * mt.shift_up().truncated(order), gf));
  out.push_back(series_check("T-fraction = closed form for mu~", mt, tfraction_closed_form(b, c, order)));
  out.push_back(series_check("mu~ = Riordan transform of Catalan g.f.", mt, tfraction_by_riordan_transform(b, c, order)));
  const auto uv = verify_uv_equality(c, order);
  out.push_back(Check{uv.name, uv.passed, uv.first_mismatch, {}});

  const auto mu = moments(LbpFamily<RF>::constant(b, c), MomentRoute::kGfExpansion, order);
  const auto j = jfraction_from_moments(mu);
  std::vector<RF> diag_want{c};
  std::vector<RF> sub_want{b * c};
  while (diag_want.size() < j.diag.size()) diag_want.push_back(RF(2) * b + c);
  while (sub_want.size() < j.sub.size()) sub_want.push_back(b * (b + c));
  out.push_back(seq_check("J-fraction extracted from moments: diagonal", j.diag, diag_want));
  out.push_back(seq_check("J-fraction extracted from moments: lambdas", j.sub, sub_want));
  out.push_back(series_check("extracted J-fraction re-expands to the moments", cf_expand(j, order), gf));
  return out;
}

using Suite = std::vector<Check> (*)(std::size_t);

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> s = {
      {"moments", moment_checks},   {"example1", example1}, {"example2", example2}, {"example3", example3},
      {"example4", example4},       {"factorizations", factorization_checks},      {"hankel", hankel_checks},
      {"toeplitz", toeplitz_checks}, {"cfrac", cfrac_checks},
  };
  return s;
}

}  // namespace

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v{"all"};
    for (const auto& [id, _] : suites()) v.push_back(id);
    return v;
  }();
  return ids;
}

ScenarioReport run_scenario(std::string_view id, std::size_t order) {
  if (order < 8) throw UsageError("verification needs --order >= 8");
  if (id == "all") {
    // Warm the shared symbols before threads touch them.
    (void)sym_b();
    (void)sym_c();
    std::vector<std::future<std::vector<Check>>> jobs;
    for (const auto& [name, fn] : suites()) jobs.push_back(std::async(std::launch::async, fn, order));
    ScenarioReport rep{"all", {}};
    for (std::size_t i = 0; i < jobs.size(); ++i)
      for (auto& chk : jobs[i].get()) {
        chk.name = suites()[i].first + ": " + chk.name;
        rep.checks.push_back(std::move(chk));
      }
    return rep;
  }
  for (const auto& [name, fn] : suites())
    if (name == id) return ScenarioReport{name, fn(order)};
  std::string known;
  for (const auto& s : scenario_ids()) known += (known.empty() ? "" : ", ") + s;
  throw UsageError("unknown scenario '" + std::string(id) + "' (expected one of " + known + ")");
}

}  // namespace lbp
