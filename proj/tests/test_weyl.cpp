#include <gtest/gtest.h>

#include "dhat/convert.hpp"
#include "dhat/parse.hpp"
#include "generators.hpp"

using namespace dhat;

namespace {

WeylElement<Rational> q(const char* s, int n = 1) { return to_rational(parse_element(s, n, false)); }

CommPoly<Rational> symbol_of(const char* s, int n = 1) { return q(s, n).principal_symbol(); }

CommPoly<Rational> poly_x(int nvars, std::vector<std::pair<Exponents, long>> terms) {
  CommPoly<Rational> p(static_cast<std::size_t>(nvars));
  for (auto& [e, c] : terms) p.add_term(e, Rational(c));
  return p;
}

}  // namespace

TEST(NormalProduct, CommutatorRelation) {
  EXPECT_EQ(q("d1") * q("x1"), q("x1*d1 + 1"));
  EXPECT_EQ((q("d1") * q("x1")).to_string(), "x1*d1 + 1");
}

TEST(NormalProduct, GeneratorsCommute) { EXPECT_EQ(q("x1", 2) * q("x2", 2), q("x2*x1", 2)); }

TEST(NormalProduct, IteratedCommutator) { EXPECT_EQ(q("d1") * q("x1^2"), q("x1^2*d1 + 2*x1")); }

TEST(NormalProduct, MixedAmbientRejected) {
  try {
    auto r = q("x1") * q("x1", 2);
    (void)r;
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedAmbient);
  }
}

TEST(BernsteinDegree, Examples) {
  EXPECT_EQ(q("x1^2*d1 + 1").bernstein_degree(), 3);
  EXPECT_EQ(q("x1*d2 - x2*d1", 2).bernstein_degree(), 2);
  EXPECT_EQ((q("d1") * q("x1^3")).bernstein_degree(), 4);
  EXPECT_THROW(WeylElement<Rational>(Algebra{1, RingTag::RationalField}).bernstein_degree(), Error);
}

TEST(PrincipalSymbol, Examples) {
  EXPECT_EQ(symbol_of("x1*d1 - 5"), poly_x(2, {{{1, 1}, 1}}));
  EXPECT_EQ(symbol_of("d1 - 1"), poly_x(2, {{{0, 1}, 1}}));
  EXPECT_EQ(symbol_of("x1^2*d1 + x1*d1^2"), poly_x(2, {{{2, 1}, 1}, {{1, 2}, 1}}));
}

TEST(Fourier, Examples) {
  EXPECT_EQ(q("x1").fourier(), q("d1"));
  EXPECT_EQ(q("x1*d1 + 1").fourier(), q("-x1*d1"));
  auto u = q("x1*d2", 2);
  EXPECT_EQ(u.fourier().fourier().fourier().fourier(), u);
}

TEST(ApplyToPolynomial, Examples) {
  CommPoly<Rational> x3 = poly_x(1, {{{3}, 1}});
  EXPECT_EQ(q("d1").apply_to(x3), poly_x(1, {{{2}, 3}}));
  for (int k = 0; k < 6; ++k) {
    CommPoly<Rational> xk = poly_x(1, {{{static_cast<std::uint16_t>(k)}, 1}});
    EXPECT_EQ(q("x1*d1").apply_to(xk), xk.scaled(Rational(k)));
  }
  EXPECT_EQ((q("d1") * q("x1")).apply_to(poly_x(1, {{{0}, 1}})), poly_x(1, {{{0}, 1}}));
}

TEST(Transpose, AntiAutomorphism) {
  gen::Source src(21);
  Algebra alg{2, RingTag::RationalField};
  for (int trial = 0; trial < 50; ++trial) {
    auto a = src.weyl<Rational>(alg, 3), b = src.weyl<Rational>(alg, 3);
    EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
    EXPECT_EQ(a.transpose().transpose(), a);
  }
}

TEST(Homogenized, CommutatorGainsH2) {
  Algebra h{1, RingTag::Homogenized};
  auto d = WeylElement<Rational>::d(h, 0), x = WeylElement<Rational>::x(h, 0);
  WeylMonomial h2 = WeylMonomial::central(2);
  EXPECT_EQ(d * x, x * d + WeylElement<Rational>::monomial(h, h2));
}

template <Field F>
void check_properties(RingTag tag, std::uint64_t seed) {
  gen::Source src(seed);
  for (int trial = 0; trial < 60; ++trial) {
    Algebra alg{static_cast<int>(src.integer(1, 2)), tag};
    auto a = src.nonzero_weyl<F>(alg, 3), b = src.nonzero_weyl<F>(alg, 3), c = src.weyl<F>(alg, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).bernstein_degree(), a.bernstein_degree() + b.bernstein_degree());
    if (tag != RingTag::PolynomialZ) {
      EXPECT_EQ((a * b).principal_symbol(), a.principal_symbol() * b.principal_symbol());
    }
    EXPECT_EQ((a * b).fourier(), a.fourier() * b.fourier());
  }
}

TEST(WeylProperties, RationalCoefficients) { check_properties<Rational>(RingTag::RationalField, 31); }
TEST(WeylProperties, LocalCoefficients) { check_properties<LocalScalar>(RingTag::LocalField, 32); }
TEST(WeylProperties, CentralZ) { check_properties<Rational>(RingTag::PolynomialZ, 33); }

TEST(WeylProperties, RepresentationIsFaithfulOnSamples) {
  gen::Source src(34);
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(src.integer(1, 2));
    Algebra alg{n, RingTag::RationalField};
    auto u = src.weyl<Rational>(alg, 3), v = src.weyl<Rational>(alg, 3);
    CommPoly<Rational> f(static_cast<std::size_t>(n));
    for (int k = 0; k < 3; ++k) {
      Exponents e(static_cast<std::size_t>(n));
      for (auto& x : e) x = static_cast<std::uint16_t>(src.integer(0, 4));
      f.add_term(e, src.rational());
    }
    EXPECT_EQ((u * v).apply_to(f), u.apply_to(v.apply_to(f)));
  }
}

TEST(Printing, RoundTrip) {
  gen::Source src(35);
  for (int trial = 0; trial < 100; ++trial) {
    Algebra alg{2, RingTag::LocalField};
    auto u = src.weyl<LocalScalar>(alg, 4);
    EXPECT_EQ(parse_element(u.to_string(), 2), u) << u.to_string();
  }
}
