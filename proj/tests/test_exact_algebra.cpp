#include "lbp/bivar_poly.hpp"
#include "lbp/errors.hpp"
#include "lbp/lbp.hpp"
#include "lbp/rational.hpp"
#include "lbp/rational_function.hpp"
#include "lbp/series.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace lbp {
namespace {

using testing::Q;
using testing::RF;
using testing::sym_b;
using testing::sym_c;

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(Rational::parse("6/4"), Rational(BigInt(3), BigInt(2)));
  EXPECT_EQ(Rational::parse("-3/2").to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("+7"), Rational(7));
  EXPECT_EQ(Rational::parse("0/5").to_string(), "0");
  EXPECT_THROW(Rational::parse("1/0"), UsageError);
  EXPECT_THROW(Rational::parse("1/-2"), UsageError);
  EXPECT_THROW(Rational::parse("abc"), UsageError);
  EXPECT_THROW(Rational::parse(""), UsageError);
  EXPECT_THROW(Rational(1) / Rational(0), MathError);
}

TEST(Rational, Powers) {
  EXPECT_EQ(Rational::parse("-2/3").pow(3), Rational::parse("-8/27"));
  EXPECT_EQ(Rational(2).pow(-2), Rational::parse("1/4"));
  EXPECT_EQ(Rational(5).pow(0), Rational(1));
}

TEST(BivarPoly, ArithmeticAndFormatting) {
  const BivarPoly b = BivarPoly::b();
  const BivarPoly c = BivarPoly::c();
  const BivarPoly p = c * (b + c) * (BivarPoly(2) * b + c);
  EXPECT_EQ(p.to_string(), "2*b^2*c+3*b*c^2+c^3");
  EXPECT_EQ((b - c * c * Rational::parse("1/2") - BivarPoly(1)).to_string(), "-1/2*c^2+b-1");
  EXPECT_EQ(BivarPoly().to_string(), "0");
  EXPECT_EQ(p.eval(2, 3), Rational(3 * 5 * 7));
  EXPECT_EQ(p.total_degree(), 3u);
}

TEST(BivarPoly, ExactDivisionAndGcd) {
  const BivarPoly b = BivarPoly::b();
  const BivarPoly c = BivarPoly::c();
  const BivarPoly f = (b + c) * (b - BivarPoly(2) * c) * c;
  const BivarPoly g = (b + c) * (b * b + c) * b;
  EXPECT_EQ(*divide_exact(f, b + c), (b - BivarPoly(2) * c) * c);
  EXPECT_FALSE(divide_exact(f, b).has_value());
  EXPECT_EQ(gcd(f, g), b + c);
  EXPECT_EQ(gcd(f * Rational(6), f * Rational(4)), *divide_exact(f, f.leading_term().second));
  EXPECT_EQ(gcd(b * b - c * c, b * c + c * c), b + c);
  EXPECT_EQ(gcd(BivarPoly(), c), c);
}

TEST(RationalFunction, CanonicalForm) {
  const RF b = sym_b();
  const RF c = sym_c();
  const RF r = (b * b - c * c) / (b * c + c * c);
  EXPECT_EQ(r.to_string(), "(b-c)/(c)");
  EXPECT_EQ(((b + c) / (RF(2) * c * c)).to_string(), "(1/2*b+1/2*c)/(c^2)");
  EXPECT_TRUE(((b + c) / (b + c)) == RF(1));
  EXPECT_TRUE((RF(1) / c - RF(1) / c).is_zero());
  EXPECT_EQ((c * (b + c) / (c * c * c)).eval(1, 1), Rational(2));
  EXPECT_THROW((RF(1) / c).eval(1, 0), MathError);
  EXPECT_THROW(RF(1) / RF(0), MathError);
}

TEST(Series, IdentityProduct) {
  const auto one_minus_t = TruncatedSeries<Q>({Q(1), Q(-1)}, 10);
  const auto geo = TruncatedSeries<Q>::constant(Q(1), 10) / one_minus_t;
  EXPECT_EQ(geo * one_minus_t, TruncatedSeries<Q>::constant(Q(1), 10));
}

TEST(Series, GeometricInverseMatchesPowers) {
  const RF c = sym_c();
  const std::size_t N = 12;
  const auto s = TruncatedSeries<RF>::constant(RF(1), N) / TruncatedSeries<RF>({RF(1), c}, N);
  // Oracle: (-c)^n by repeated multiplication.
  RF expected(1);
  for (std::size_t n = 0; n <= N; ++n) {
    EXPECT_EQ(s[n], expected) << n;
    expected = expected * -c;
  }
}

TEST(Series, OrderBookkeeping) {
  const auto a = TruncatedSeries<Q>({Q(1), Q(2), Q(3)}, 5);
  const auto b = TruncatedSeries<Q>({Q(1), Q(1)}, 3);
  EXPECT_EQ((a * b).order(), 3u);
  EXPECT_EQ((a + b).order(), 3u);
  EXPECT_EQ(a.shift_up().order(), 6u);
  EXPECT_THROW(a.shift_down(), MathError);
  EXPECT_THROW(a[6], UsageError);
  EXPECT_THROW(a / TruncatedSeries<Q>({Q(0), Q(1)}, 5), MathError);
}

TEST(Series, BivariateGeneratingFunctionRecoversRows) {
  const RF b = sym_b();
  const RF c = sym_c();
  const auto gf_rows = lbp_rows_by_generating_function(b, c, 7);
  const auto rec_rows = lbp_rows_by_recurrence(LbpFamily<RF>::constant(b, c), 7);
  ASSERT_EQ(gf_rows.size(), rec_rows.size());
  for (std::size_t n = 0; n < rec_rows.size(); ++n) EXPECT_EQ(gf_rows[n], rec_rows[n]) << n;
}

TEST(Series, ComposeGeometricWithShiftedVariable) {
  const RF c = sym_c();
  const std::size_t N = 10;
  const auto one = TruncatedSeries<RF>::constant(RF(1), N);
  const auto t = TruncatedSeries<RF>::variable(N);
  const auto outer = one / TruncatedSeries<RF>({RF(1), RF(-1)}, N);
  const auto inner = t / TruncatedSeries<RF>({RF(1), -c}, N);
  const auto composed = compose(outer, inner);
  // Cross-multiplied closed form (1 - ct)/(1 - (c+1)t).
  EXPECT_EQ(composed * TruncatedSeries<RF>({RF(1), -(c + RF(1))}, N), TruncatedSeries<RF>({RF(1), -c}, N));
}

TEST(Series, ComposeWithIdentity) {
  testing::RationalSampler rs(7);
  const auto a = rs.series(9);
  EXPECT_EQ(compose(a, TruncatedSeries<Q>::variable(9)), a);
  EXPECT_THROW(compose(a, a), MathError);
}

TEST(Series, CatalanCompositionGivesMomentSeries) {
  const RF b = sym_b();
  const RF c = sym_c();
  const std::size_t N = 10;
  const auto one = TruncatedSeries<RF>::constant(RF(1), N + 1);
  // C(t) = (1 - sqrt(1 - 4t)) / 2t
  const auto catalan_gf =
      (RF(Rational(1, 2)) * (one - sqrt(TruncatedSeries<RF>({RF(1), RF(-4)}, N + 1)))).shift_down();
  const auto one_minus_ct = TruncatedSeries<RF>({RF(1), -c}, N);
  const auto t = TruncatedSeries<RF>::variable(N);
  const auto arg = b * t / (one_minus_ct * one_minus_ct);
  const auto mu = one.truncated(N) + (c * t / one_minus_ct) * compose(catalan_gf, arg);
  const auto expected = detail::moment_generating_function(b, c, N);
  EXPECT_EQ(first_mismatch(mu, expected), -1);
  EXPECT_EQ(mu[4], c * (b + c) * (RF(5) * b * b + RF(5) * b * c + c * c));
}

TEST(Series, ReversionExamples) {
  const auto t = TruncatedSeries<Q>::variable(8);
  EXPECT_EQ(reversion(t), t);
  // t(1-2t)/(1+t)
  const auto f = TruncatedSeries<Q>({Q(0), Q(1), Q(-2)}, 8) / TruncatedSeries<Q>({Q(1), Q(1)}, 8);
  const auto g = reversion(f);
  const std::vector<Q> expected = {0, 1, 3, 15, 93, 645};
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(g[n], expected[n]) << n;
  EXPECT_THROW(reversion(TruncatedSeries<Q>({Q(1), Q(1)}, 4)), MathError);
  EXPECT_THROW(reversion(TruncatedSeries<Q>({Q(0), Q(0), Q(1)}, 4)), MathError);
}

TEST(Series, SymbolicReversionRoundTrip) {
  const RF b = sym_b();
  const RF c = sym_c();
  const std::size_t N = 10;
  const auto f = TruncatedSeries<RF>({RF(0), RF(1), -b}, N) / TruncatedSeries<RF>({RF(1), c}, N);
  const auto g = reversion(f);
  EXPECT_EQ(compose(f, g), TruncatedSeries<RF>::variable(N));
  EXPECT_EQ(compose(g, f), TruncatedSeries<RF>::variable(N));
}

TEST(Series, SquareRoots) {
  const auto one = TruncatedSeries<Q>::constant(Q(1), 8);
  EXPECT_EQ(sqrt(one), one);
  const auto lin = TruncatedSeries<Q>({Q(1), Q(-1)}, 8);
  EXPECT_EQ(sqrt(lin * lin), lin);
  EXPECT_THROW(sqrt(TruncatedSeries<Q>({Q(4), Q(1)}, 8)), MathError);

  const RF b = sym_b();
  const RF c = sym_c();
  const auto mu = detail::moment_generating_function(b, c, 6);
  EXPECT_EQ(mu[2], c * (b + c));
}

// Property suite over random rational series.
TEST(SeriesProperties, RingAxioms) {
  testing::RationalSampler rs(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const auto a = rs.series(10);
    const auto b = rs.series(10);
    const auto c = rs.series(10);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) / b, a);
  }
}

TEST(SeriesProperties, ReversionRoundTrip) {
  testing::RationalSampler rs(99);
  for (int trial = 0; trial < 12; ++trial) {
    const auto f = rs.series(9, /*zero_constant=*/true);
    const auto g = reversion(f);
    const auto t = TruncatedSeries<Q>::variable(9);
    EXPECT_EQ(compose(f, g), t);
    EXPECT_EQ(compose(g, f), t);
  }
}

TEST(SeriesProperties, SqrtSquares) {
  testing::RationalSampler rs(5);
  for (int trial = 0; trial < 12; ++trial) {
    auto f = rs.series(10);
    f.set(0, Q(1));
    const auto s = sqrt(f);
    EXPECT_EQ(s * s, f);
    EXPECT_EQ(s[0], Q(1));
  }
}

}  // namespace
}  // namespace lbp
