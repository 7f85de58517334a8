#include <gtest/gtest.h>

#include "dhat/factor.hpp"
#include "dhat/linalg.hpp"
#include "generators.hpp"

using namespace dhat;

namespace {

UPoly poly(std::initializer_list<long> low_first) {
  std::vector<Rational> c;
  for (long v : low_first) c.emplace_back(v);
  return UPoly(std::move(c));
}

UPoly expand(const std::vector<PolyFactor>& fs) {
  UPoly p(1);
  for (const auto& f : fs)
    for (int k = 0; k < f.multiplicity; ++k) p = p * f.factor;
  return p;
}

}  // namespace

TEST(Factor, RationalRoots) {
  // (2s - 1)(s + 3)(s^2 + 1) = 2s^4 + 5s^3 - s^2 + 5s - 3
  auto roots = rational_roots(poly({-3, 5, -1, 5, 2}));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], Rational(-3));
  EXPECT_EQ(roots[1], Rational(1, 2));
  EXPECT_EQ(integer_roots(poly({-3, 5, -1, 5, 2})), std::vector<Integer>{Integer(-3)});
  EXPECT_EQ(rational_roots(poly({0, 0, 1})), std::vector<Rational>{Rational(0)});
}

TEST(Factor, SquarefreeAndIrreducible) {
  // s^2 (s - 1)^3 (s^2 + 1)
  UPoly f = poly({0, 0, 1}) * poly({-1, 1}) * poly({-1, 1}) * poly({-1, 1}) * poly({1, 0, 1});
  auto fs = factor_rational(f);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(expand(fs), f);
  int total = 0;
  for (const auto& p : fs) total += p.multiplicity * static_cast<int>(p.factor.degree());
  EXPECT_EQ(total, 7);
}

TEST(Factor, QuarticSplitsIntoQuadratics) {
  // (s^2 + 1)(s^2 + 2) has no rational roots.
  UPoly f = poly({1, 0, 1}) * poly({2, 0, 1});
  auto fs = factor_rational(f);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].factor.degree(), 2);
  EXPECT_EQ(fs[1].factor.degree(), 2);
  EXPECT_EQ(expand(fs), f);
}

TEST(Factor, RandomProductsRoundTrip) {
  gen::Source src(7);
  for (int trial = 0; trial < 40; ++trial) {
    UPoly f(1);
    int pieces = static_cast<int>(src.integer(1, 3));
    for (int k = 0; k < pieces; ++k) {
      UPoly p;
      while (p.degree() < 1) p = src.upoly(2, 3);
      f = f * p;
    }
    auto fs = factor_rational(f);
    EXPECT_EQ(expand(fs), f.monic());
    for (const auto& p : fs) {
      EXPECT_EQ(p.factor, p.factor.monic());
      if (p.factor.degree() >= 2) {
        EXPECT_TRUE(rational_roots(p.factor).empty());
      }
    }
  }
}

TEST(LinAlg, RankDeterminantKernel) {
  DenseMatrix<Rational> m(3, 3);
  long vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rational(vals[i][j]);
  EXPECT_EQ(rank(m), 3u);
  EXPECT_EQ(determinant(m), Rational(-3));
  m(2, 2) = Rational(9);
  EXPECT_EQ(rank(m), 2u);
  EXPECT_TRUE(determinant(m).is_zero());
  auto k = left_kernel(m);
  ASSERT_EQ(k.size(), 1u);
  for (std::size_t j = 0; j < 3; ++j) {
    Rational s;
    for (std::size_t i = 0; i < 3; ++i) s = s + k[0][i] * m(i, j);
    EXPECT_TRUE(s.is_zero());
  }
}

TEST(LinAlg, MinimalPolynomial) {
  DenseMatrix<Rational> a(3, 3);
  a(0, 0) = Rational(2);
  a(1, 1) = Rational(2);
  a(2, 2) = Rational(3);
  EXPECT_EQ(minimal_polynomial(a), poly({-2, 1}) * poly({-3, 1}));
  a(0, 1) = Rational(1);
  EXPECT_EQ(minimal_polynomial(a), poly({-2, 1}) * poly({-2, 1}) * poly({-3, 1}));
}

TEST(LinAlg, LocalScalarDeterminant) {
  DenseMatrix<LocalScalar> m(2, 2);
  m(0, 0) = LocalScalar::z();
  m(0, 1) = LocalScalar(1);
  m(1, 0) = LocalScalar(1);
  m(1, 1) = LocalScalar::z();
  LocalScalar d = determinant(m);
  EXPECT_EQ(d, LocalScalar::z() * LocalScalar::z() - LocalScalar(1));
}
