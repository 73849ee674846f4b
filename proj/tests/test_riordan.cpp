#include "lbp/lbp.hpp"
#include "lbp/orthopoly.hpp"
#include "lbp/riordan.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace lbp {
namespace {

using testing::Q;
using testing::RF;
using testing::sym_b;
using testing::sym_c;

RiordanArray<RF> symbolic_L(std::size_t order) {
  return lbp_coefficient_array(LbpFamily<RF>::constant(sym_b(), sym_c()), order);
}

RiordanArray<Q> random_array(testing::RationalSampler& rs, std::size_t order) {
  auto g = rs.series(order);
  auto f = rs.series(order, /*zero_constant=*/true);
  return RiordanArray<Q>(g, f);
}

TEST(Riordan, Entries) {
  const RF b = sym_b();
  const RF c = sym_c();
  const auto L = symbolic_L(8);
  // P_2 = (x - c)^2 - bx by one recurrence step.
  EXPECT_EQ(L.entry(2, 1), -(RF(2) * c + b));
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(L.entry(n, n), RF(1));
  EXPECT_EQ(L.entry(2, 3), RF(0));
  EXPECT_THROW(L.entry(9, 1), UsageError);

  const auto delannoy = lbp_coefficient_array(LbpFamily<RF>::constant(c, c), 6);
  const std::vector<RF> row4 = {c * c * c * c, RF(-7) * c * c * c, RF(13) * c * c, RF(-7) * c, RF(1)};
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(delannoy.entry(4, k), row4[k]) << k;
}

TEST(Riordan, InvalidArraysRejected) {
  const auto t = TruncatedSeries<Q>::variable(4);
  const auto one = TruncatedSeries<Q>::constant(Q(1), 4);
  EXPECT_THROW(RiordanArray<Q>(t, t), MathError);
  EXPECT_THROW(RiordanArray<Q>(one, one), MathError);
  EXPECT_THROW(RiordanArray<Q>(one, t * t), MathError);
}

TEST(Riordan, IdentityAndFactorProducts) {
  const RF b = sym_b();
  const RF c = sym_c();
  const std::size_t N = 8;
  const auto L = symbolic_L(N);
  EXPECT_EQ(RiordanArray<RF>::identity(N) * L, L);
  EXPECT_EQ(L * RiordanArray<RF>::identity(N), L);

  const auto one = TruncatedSeries<RF>::constant(RF(1), N);
  const auto t = TruncatedSeries<RF>::variable(N);
  const RiordanArray<RF> shift(one, t / TruncatedSeries<RF>({RF(1), -b}, N));
  EXPECT_EQ(shift * ortho_array(OrthoKind::kQ, b, c, N), L);
  EXPECT_EQ(binomial_array(b, N) * ortho_array(OrthoKind::kQTilde, b, c, N), L);
}

TEST(Riordan, Inverses) {
  const std::size_t N = 8;
  const auto one = TruncatedSeries<Q>::constant(Q(1), N);
  const auto t = TruncatedSeries<Q>::variable(N);
  const RiordanArray<Q> a(one / TruncatedSeries<Q>({Q(1), Q(1)}, N), t / TruncatedSeries<Q>({Q(1), Q(1)}, N));
  const RiordanArray<Q> binom(one / TruncatedSeries<Q>({Q(1), Q(-1)}, N), t / TruncatedSeries<Q>({Q(1), Q(-1)}, N));
  EXPECT_EQ(a.inverse(), binom);

  const RF b = sym_b();
  const RF c = sym_c();
  const auto L = symbolic_L(N);
  const auto Linv = L.inverse();
  EXPECT_EQ(Linv.entry(0, 0), RF(1));
  EXPECT_EQ(Linv.entry(1, 0), c);
  EXPECT_EQ(Linv.entry(2, 0), c * (b + c));
  EXPECT_EQ(Linv.entry(3, 0), c * (b + c) * (RF(2) * b + c));
  EXPECT_EQ(Linv.inverse(), L);
  // Series inverse agrees with the matrix inverse.
  EXPECT_EQ(Linv.materialize(), L.materialize().inverse());
}

// The displayed matrix is the production matrix of the moment matrix L^{-1};
// L's own production matrix has -c in the corner.
TEST(Riordan, ProductionMatrixOfMomentMatrix) {
  const RF b = sym_b();
  const RF c = sym_c();
  const auto P = production_matrix(symbolic_L(6).inverse().materialize());
  ASSERT_EQ(P.rows(), 6u);
  const RF bc = b + c;
  const Matrix<RF> expected = {
      {c, RF(1), RF(0), RF(0), RF(0), RF(0)},
      {b * c, bc, RF(1), RF(0), RF(0), RF(0)},
      {b * b * c, b * bc, bc, RF(1), RF(0), RF(0)},
      {power(b, 3) * c, b * b * bc, b * bc, bc, RF(1), RF(0)},
      {power(b, 4) * c, power(b, 3) * bc, b * b * bc, b * bc, bc, RF(1)},
      {power(b, 5) * c, power(b, 4) * bc, power(b, 3) * bc, b * b * bc, b * bc, bc},
  };
  const auto mm = first_mismatch(P, expected);
  EXPECT_FALSE(mm.has_value()) << mm->first << "," << mm->second << " " << P(mm->first, mm->second) << " vs " << expected(mm->first, mm->second);
  EXPECT_FALSE(column_shift_violation(P).has_value());

  const auto PL = production_matrix(symbolic_L(6).materialize());
  EXPECT_EQ(PL(0, 0), -c);
  EXPECT_FALSE(column_shift_violation(PL).has_value());
}

TEST(Riordan, ProductionMatrixOfIdentityIsShift) {
  const auto P = production_matrix(RiordanArray<Q>::identity(6).materialize());
  for (std::size_t i = 0; i < P.rows(); ++i)
    for (std::size_t j = 0; j < P.cols(); ++j) EXPECT_EQ(P(i, j), Q(j == i + 1 ? 1 : 0));
  EXPECT_THROW(production_matrix(LowerTriangularMatrix<Q>(1)), UsageError);
  EXPECT_THROW(production_matrix(LowerTriangularMatrix<Q>(3)), MathError);
}

TEST(Riordan, PeriodicMomentMatrixIsNotRiordan) {
  const LbpFamily<Q> fam({Q(1), Q(2)}, {Q(1)});
  const auto M = lbp_moment_matrix(fam, 7);
  const auto P = production_matrix(M);
  const Matrix<Q> head = {{1, 1, 0}, {2, 3, 1}, {2, 3, 2}};
  EXPECT_EQ(P.block(3, 3), head);
  const auto violation = column_shift_violation(P);
  ASSERT_TRUE(violation.has_value());
  EXPECT_EQ(*violation, (std::pair<std::size_t, std::size_t>{2, 2}));
}

TEST(Riordan, BinomialArray) {
  const auto B1 = binomial_array(Q(1), 4).materialize();
  EXPECT_EQ(B1.row(2), (std::vector<Q>{1, 2, 1}));
  EXPECT_EQ(B1.row(1), (std::vector<Q>{1, 1}));
  EXPECT_EQ(binomial_array(Q(2), 6).entry(3, 1), Q(12));
  const RF b = sym_b();
  EXPECT_EQ(binomial_array(b, 8).inverse(), binomial_array(-b, 8));
}

TEST(RiordanProperties, GroupAxioms) {
  testing::RationalSampler rs(31337);
  const std::size_t N = 7;
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_array(rs, N);
    const auto b = random_array(rs, N);
    const auto c = random_array(rs, N);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * RiordanArray<Q>::identity(N), a);
    EXPECT_EQ(RiordanArray<Q>::identity(N) * a, a);
    EXPECT_EQ(a * a.inverse(), RiordanArray<Q>::identity(N));
    EXPECT_EQ(a.inverse() * a, RiordanArray<Q>::identity(N));
    // Materializing commutes with the product.
    EXPECT_EQ((a * b).materialize(), a.materialize() * b.materialize());
    EXPECT_FALSE(column_shift_violation(production_matrix(a.materialize())).has_value());
  }
}

TEST(RiordanProperties, ProductionColumnShiftOnCorpus) {
  testing::RationalSampler rs(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [b, c] = rs.parameters();
    const auto L = lbp_coefficient_array(LbpFamily<Q>::constant(b, c), 8);
    EXPECT_FALSE(column_shift_violation(production_matrix(L.materialize())).has_value());
    EXPECT_FALSE(column_shift_violation(production_matrix(L.inverse().materialize())).has_value());
    for (auto kind : {OrthoKind::kQ, OrthoKind::kQTilde, OrthoKind::kQHat})
      EXPECT_FALSE(column_shift_violation(production_matrix(ortho_array(kind, b, c, 8).materialize())).has_value());
  }
}

}  // namespace
}  // namespace lbp
