#include <gtest/gtest.h>

#include "dhat/convert.hpp"
#include "dhat/groebner.hpp"
#include "dhat/parse.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dhat;

namespace {

const Algebra kW1{1, RingTag::RationalField};

WeylElement<Rational> q(const char* s, int n = 1) { return to_rational(parse_element(s, n, false)); }

FreeVector<Rational> vec(std::initializer_list<const char*> entries, int n = 1) {
  std::vector<WeylElement<Rational>> es;
  for (const char* e : entries) es.push_back(q(e, n));
  return FreeVector<Rational>(Algebra{n, RingTag::RationalField}, std::move(es));
}

GroebnerBasis<Rational> gb(std::initializer_list<const char*> gens, int n = 1) {
  std::vector<FreeVector<Rational>> vs;
  for (const char* g : gens) vs.push_back(vec({g}, n));
  return buchberger(Algebra{n, RingTag::RationalField}, 1, vs);
}

}  // namespace

TEST(NormalForm, Examples) {
  auto g = gb({"d1"});
  EXPECT_TRUE(left_normal_form(vec({"d1"}), g).is_zero());
  EXPECT_EQ(left_normal_form(vec({"x1*d1 + 1"}), g), vec({"1"}));
  EXPECT_EQ(left_normal_form(vec({"x1"}), g), vec({"x1"}));
}

TEST(NormalForm, RankMismatch) {
  auto g = gb({"d1"});
  try {
    left_normal_form(vec({"d1", "x1"}), g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankMismatch);
  }
}

TEST(Buchberger, Examples) {
  auto g1 = gb({"x1", "d1"});
  ASSERT_EQ(g1.size(), 1u);
  EXPECT_EQ(g1.generators()[0], vec({"1"}));

  auto g2 = gb({"d1"});
  ASSERT_EQ(g2.size(), 1u);
  EXPECT_EQ(g2.generators()[0], vec({"d1"}));

  auto g3 = gb({"x1*d1 - 3/7", "x1^2*d1 - 3/7*x1"});
  ASSERT_EQ(g3.size(), 1u);
  EXPECT_EQ(g3.generators()[0], vec({"x1*d1 - 3/7"}));
}

TEST(Syzygies, PrincipalHasNone) {
  EXPECT_TRUE(syzygy_module(gb({"d1"})).empty());
  EXPECT_TRUE(syzygies<Rational>(kW1, 1, {}).empty());
}

TEST(Syzygies, CommutatorRelation) {
  std::vector<FreeVector<Rational>> gens{vec({"x1"}), vec({"d1"}), vec({"1"})};
  auto syz = syzygies(kW1, 1, gens);
  ASSERT_FALSE(syz.empty());
  // d1 * x1 - x1 * d1 - 1 * 1 = 0 must lie in the syzygy module.
  auto sgb = buchberger(kW1, 3, syz);
  EXPECT_TRUE(sgb.contains(vec({"d1", "-x1", "-1"})));
  for (const auto& s : syz) {
    WeylElement<Rational> sum(kW1);
    for (std::size_t j = 0; j < gens.size(); ++j) sum += s[j] * gens[j][0];
    EXPECT_TRUE(sum.is_zero());
  }
}

TEST(Modules, EliminationKeepsComponentsApart) {
  Algebra w2{2, RingTag::RationalField};
  std::vector<FreeVector<Rational>> gens{vec({"d1", "x2"}, 2), vec({"d2", "0"}, 2)};
  auto g = buchberger(w2, 2, gens);
  EXPECT_TRUE(g.contains(vec({"d2*d1", "d2*x2"}, 2)));
  EXPECT_FALSE(g.contains(vec({"0", "1"}, 2)));
}

TEST(Modules, IntersectionOfPrincipalIdeals) {
  std::vector<FreeVector<Rational>> a{vec({"x1"})}, b{vec({"d1"})};
  auto meet = intersect(kW1, 1, a, b);
  auto ga = buchberger(kW1, 1, a), gb2 = buchberger(kW1, 1, b);
  ASSERT_FALSE(meet.empty());
  for (const auto& v : meet) {
    EXPECT_TRUE(ga.contains(v));
    EXPECT_TRUE(gb2.contains(v));
  }
  auto gm = buchberger(kW1, 1, meet);
  EXPECT_FALSE(gm.contains(vec({"x1*d1"})));
}

TEST(GroebnerProperties, NormalFormIsSoundAndIdempotent) {
  gen::Source src(41);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<FreeVector<Rational>> gens;
    long k = src.integer(1, 3);
    for (long i = 0; i < k; ++i) gens.push_back(FreeVector<Rational>(kW1, {src.nonzero_weyl<Rational>(kW1, 3, 3)}));
    auto g = buchberger(kW1, 1, gens);
    for (const auto& gv : gens) EXPECT_TRUE(g.contains(gv));
    for (int s = 0; s < 5; ++s) {
      FreeVector<Rational> v(kW1, {src.weyl<Rational>(kW1, 4)});
      auto r = g.normal_form(v);
      EXPECT_EQ(g.normal_form(r), r);
      EXPECT_TRUE(g.contains(v - r));
    }
  }
}

TEST(GroebnerProperties, MembershipAgreesWithLinearAlgebra) {
  // Degree-bounded linear algebra only ever certifies membership; a negative
  // answer at a fixed bound is inconclusive. Positive answers must match the
  // normal form, and every normal-form member must acquire a certificate once
  // the bound is raised far enough.
  gen::Source src(42);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<WeylElement<Rational>> gens;
    std::vector<FreeVector<Rational>> vs;
    long k = src.integer(1, 3);
    for (long i = 0; i < k; ++i) {
      gens.push_back(src.nonzero_weyl<Rational>(kW1, 4, 3));
      vs.push_back(FreeVector<Rational>(kW1, {gens.back()}));
    }
    auto g = buchberger(kW1, 1, vs);
    for (int s = 0; s < 6; ++s) {
      WeylElement<Rational> v(kW1);
      if (s % 2 == 0) {
        for (const auto& gi : gens) {
          int room = std::max(0, 8 - gi.bernstein_degree());
          v += src.weyl<Rational>(kW1, std::min(room, 3), 2) * gi;
        }
      } else {
        v = src.weyl<Rational>(kW1, 4, 4);
      }
      if (v.is_zero()) continue;
      bool member = g.contains(FreeVector<Rational>(kW1, {v}));
      if (oracle::brute_force_member(v, gens, 8)) {
        EXPECT_TRUE(member) << "v = " << v.to_string();
      }
      if (member) {
        bool certified = false;
        for (int bound = 8; bound <= 16 && !certified; bound += 2) certified = oracle::brute_force_member(v, gens, bound);
        EXPECT_TRUE(certified) << "v = " << v.to_string();
      } else {
        EXPECT_FALSE(oracle::brute_force_member(v, gens, 14)) << "v = " << v.to_string();
      }
    }
  }
}

TEST(GroebnerProperties, LocalCoefficients) {
  Algebra alg{1, RingTag::LocalField};
  auto u = parse_element("z*d1 - 1", 1);
  auto g = buchberger(alg, 1, std::vector<FreeVector<LocalScalar>>{FreeVector<LocalScalar>(alg, {u})});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.generators()[0][0], parse_element("d1 - 1/z", 1));
  EXPECT_FALSE(g.is_everything());
}
