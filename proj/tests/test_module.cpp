#include <gtest/gtest.h>

#include "dhat/char_cycle.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace dhat;
using fx::cyclic;

namespace {

template <class Fn>
ErrorCode code_of(Fn&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

CharCycle cycle_or_empty(const PresentedModule<Rational>& m) { return is_zero(m) ? CharCycle{} : char_cycle(m); }

}  // namespace

TEST(HilbertDimension, Examples) {
  EXPECT_EQ(hilbert_dimension(cyclic({"d1"})), 1);
  EXPECT_EQ(hilbert_dimension(PresentedModule<Rational>::free(fx::weyl(1), 1)), 2);
  EXPECT_EQ(hilbert_dimension(cyclic({"x1"})), 1);
  EXPECT_EQ(code_of([] { hilbert_dimension(cyclic({"x1", "d1"})); }), ErrorCode::ZeroModule);
  EXPECT_EQ(hilbert_dimension(cyclic({"d1"}, 2)), 3);
  EXPECT_EQ(hilbert_dimension(cyclic({"d1", "d2"}, 2)), 2);
}

TEST(CharCycle, Examples) {
  EXPECT_EQ(char_cycle(cyclic({"d1"})).to_string(), "{(xi1): 1}");
  EXPECT_EQ(char_cycle(cyclic({"x1"})).to_string(), "{(x1): 1}");
  EXPECT_EQ(char_cycle(cyclic({"x1*d1"})).to_string(), "{(x1): 1, (xi1): 1}");
  EXPECT_EQ(char_cycle(cyclic({"x1^2*d1^2 + 1"})).to_string(), "{(x1): 2, (xi1): 2}");
  EXPECT_EQ(char_cycle(cyclic({"d1^2 - x1^2"})).to_string(), "{(x1 + xi1): 1, (x1 - xi1): 1}");
  EXPECT_EQ(char_cycle(cyclic({"d1^2 + x1^2"})).total_multiplicity(), 1);
  EXPECT_EQ(code_of([] { char_cycle(cyclic({"1"})); }), ErrorCode::ZeroModule);
}

TEST(CharCycle, HigherAmbient) {
  EXPECT_EQ(char_cycle(cyclic({"x1*d2"}, 2)).to_string(), "{(x1): 1, (xi2): 1}");
  EXPECT_EQ(char_cycle(cyclic({"d1 + d2"}, 2)).total_multiplicity(), 1);
  EXPECT_EQ(char_cycle(cyclic({"d1", "d2"}, 2)).to_string(), "{(xi1, xi2): 1}");
  EXPECT_EQ(char_cycle(cyclic({"d1^2", "d2"}, 2)).to_string(), "{(xi1, xi2): 2}");
  // x1^2, x1 xi2, xi2^2: standard monomials 1, x1, xi2.
  EXPECT_EQ(char_cycle(cyclic({"x1^2", "x1*d2", "d2^2"}, 2)).to_string(), "{(x1, xi2): 3}");
  EXPECT_EQ(char_cycle(cyclic({"x1", "d2"}, 2)).components().front().dimension, 2);
  EXPECT_EQ(code_of([] { char_cycle(cyclic({"d1 + x2", "d2 + x1"}, 2)); }), ErrorCode::UnsupportedAmbient);
  EXPECT_EQ(code_of([] { char_cycle(cyclic({"x1*d1 + x2*d2"}, 2)); }), ErrorCode::UnsupportedAmbient);
}

TEST(CharCycle, RankTwo) {
  auto m = fx::matrix_module({{"d1", "0"}, {"0", "x1"}}, 2);
  EXPECT_EQ(char_cycle(m).to_string(), "{(x1): 1, (xi1): 1}");
  auto partial = fx::matrix_module({{"d1", "x1"}}, 2);
  EXPECT_EQ(char_cycle(partial).to_string(), "{(0): 1}");
}

TEST(Ext, Examples) {
  auto m = cyclic({"d1"});
  EXPECT_TRUE(is_zero(ext(0, m)));
  auto e1 = ext(1, m);
  EXPECT_EQ(e1.side(), Side::Right);
  EXPECT_FALSE(is_zero(e1));
  EXPECT_EQ(e1.rank(), 1u);
  EXPECT_EQ(e1.to_string(), "right module, 1 generator(s), relations [[d1]]");

  auto f = ext(0, PresentedModule<Rational>::free(fx::weyl(1), 1));
  EXPECT_EQ(f.side(), Side::Right);
  EXPECT_EQ(f.rank(), 1u);
  EXPECT_TRUE(f.relations().rows.empty());

  EXPECT_EQ(code_of([&] { ext(2, m); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { ext(-1, m); }), ErrorCode::IndexOutOfRange);
}

TEST(Grade, Examples) {
  EXPECT_EQ(grade(PresentedModule<Rational>::free(fx::weyl(1), 1)), std::optional<int>(0));
  EXPECT_EQ(grade(cyclic({"d1"})), std::optional<int>(1));
  EXPECT_EQ(grade(cyclic({"x1", "d1"})), std::nullopt);
  EXPECT_EQ(grade(PresentedModule<Rational>::zero(fx::weyl(2))), std::nullopt);
  EXPECT_EQ(grade(cyclic({"d1", "d2"}, 2)), std::optional<int>(2));
  EXPECT_EQ(grade(cyclic({"d1"}, 2)), std::optional<int>(1));
}

TEST(MinimalDimension, Examples) {
  EXPECT_TRUE(is_minimal_dimension(cyclic({"d1 - 1"})));
  EXPECT_FALSE(is_minimal_dimension(PresentedModule<Rational>::free(fx::weyl(1), 1)));
  EXPECT_FALSE(is_minimal_dimension(cyclic({"d1"}, 2)));
  EXPECT_TRUE(is_minimal_dimension(cyclic({"d1", "d2"}, 2)));
}

TEST(DualStar, Examples) {
  auto d = dual_star(cyclic({"d1"}));
  EXPECT_EQ(d.side(), Side::Right);
  EXPECT_EQ(d.to_string(), "right module, 1 generator(s), relations [[d1]]");

  auto dd = dual_star(dual_star(cyclic({"x1"})));
  EXPECT_EQ(dd.side(), Side::Left);
  EXPECT_EQ(char_cycle(dd).to_string(), "{(x1): 1}");

  auto k = dual_star(cyclic({"x1*d1 - 1/2"}));
  EXPECT_EQ(k.side(), Side::Right);
  EXPECT_EQ(grade(k), std::optional<int>(1));

  EXPECT_EQ(code_of([] { dual_star(PresentedModule<Rational>::free(fx::weyl(1), 1)); }), ErrorCode::NotMinimalDimension);
}

TEST(Prune, RemovesUnitPivots) {
  auto m = fx::matrix_module({{"1", "x1"}, {"d1", "d1^2"}}, 2);
  auto p = prune(m);
  EXPECT_EQ(p.rank(), 1u);
  EXPECT_EQ(char_cycle(p), char_cycle(m));
}

// Random holonomic-or-smaller modules over W_1: cyclic quotients by one or
// two random operators, or rank-two quotients by a few random rows.
namespace {

PresentedModule<Rational> random_module(gen::Source& src) {
  const Algebra w = fx::weyl(1);
  const std::size_t r = src.coin(0.7) ? 1 : 2;
  WeylMatrix<Rational> m(w, r);
  const long rows = src.integer(0, r == 1 ? 2 : 3);
  for (long i = 0; i < rows; ++i) {
    FreeVector<Rational> v(w, r);
    for (std::size_t j = 0; j < r; ++j)
      if (src.coin(0.7)) v[j] = src.weyl<Rational>(w, 2, 2);
    if (!v.is_zero()) m.rows.push_back(std::move(v));
  }
  return PresentedModule<Rational>(std::move(m));
}

}  // namespace

TEST(ModuleProperties, GradeBoundAndDimension) {
  gen::Source src(101);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_module(src);
    auto g = grade(m);
    if (!g) {
      EXPECT_TRUE(is_zero(m));
      continue;
    }
    EXPECT_GE(*g, 0);
    EXPECT_LE(*g, 1);
    EXPECT_EQ(*g + hilbert_dimension(m), 2) << m.to_string();
  }
}

TEST(ModuleProperties, TwoOutOfThreeAndAdditivity) {
  // 0 -> W v + N / N -> W^r / N -> W^r / (N + W v) -> 0 with the submodule
  // presented as W / {c : c v in N}.
  gen::Source src(202);
  const Algebra w = fx::weyl(1);
  int holonomic_cases = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto mid = random_module(src);
    const std::size_t r = mid.rank();
    FreeVector<Rational> v(w, r);
    for (std::size_t j = 0; j < r; ++j) v[j] = src.weyl<Rational>(w, 2, 2);
    if (v.is_zero()) v[0] = WeylElement<Rational>::x(w, 0);
    auto ann = modulo(w, r, std::vector<FreeVector<Rational>>{v}, mid.relations().rows);
    PresentedModule<Rational> sub(WeylMatrix<Rational>(w, 1, ann));
    WeylMatrix<Rational> qrel = mid.relations();
    qrel.rows.push_back(v);
    PresentedModule<Rational> quot(std::move(qrel));

    const bool md_mid = is_minimal_dimension(mid);
    EXPECT_EQ(md_mid, is_minimal_dimension(sub) && is_minimal_dimension(quot)) << mid.to_string();
    if (md_mid) {
      ++holonomic_cases;
      EXPECT_EQ(cycle_or_empty(mid), cycle_or_empty(sub) + cycle_or_empty(quot)) << mid.to_string();
    }
  }
  EXPECT_GE(holonomic_cases, 5);
}

TEST(ModuleProperties, Duality) {
  gen::Source src(303);
  const Algebra w = fx::weyl(1);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = PresentedModule<Rational>::cyclic({src.nonzero_weyl<Rational>(w, 3, 3)}, w);
    if (is_zero(m)) continue;
    auto d = dual_star(m);
    EXPECT_EQ(grade(d), std::optional<int>(1));
    auto dd = dual_star(d);
    EXPECT_EQ(dd.side(), Side::Left);
    EXPECT_EQ(char_cycle(dd), char_cycle(m)) << m.to_string();
  }
}

TEST(ModuleProperties, PresentationIndependence) {
  // Row operation, column change of basis, and a killed extra generator.
  gen::Source src(404);
  const Algebra w = fx::weyl(1);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = src.nonzero_weyl<Rational>(w, 3, 3);
    auto q = src.nonzero_weyl<Rational>(w, 3, 3);
    auto a = src.weyl<Rational>(w, 2, 2);
    auto b = src.weyl<Rational>(w, 2, 2);
    WeylElement<Rational> zero(w), one = WeylElement<Rational>::constant(w, Rational(1));
    WeylMatrix<Rational> base(w, 2, {FreeVector<Rational>(w, {p, zero}), FreeVector<Rational>(w, {zero, q})});
    WeylMatrix<Rational> row_op(w, 2, {FreeVector<Rational>(w, {one, zero}), FreeVector<Rational>(w, {a, one})});
    WeylMatrix<Rational> col_op(w, 2, {FreeVector<Rational>(w, {one, b}), FreeVector<Rational>(w, {zero, one})});
    PresentedModule<Rational> m1(base);
    PresentedModule<Rational> m2(row_op * base * col_op);
    WeylMatrix<Rational> padded(w, 3);
    padded.rows.push_back(FreeVector<Rational>(w, {p, zero, zero}));
    padded.rows.push_back(FreeVector<Rational>(w, {zero, q, zero}));
    padded.rows.push_back(FreeVector<Rational>(w, {a, zero, one}));
    PresentedModule<Rational> m3(padded);
    const bool zero_module = is_zero(m1);
    ASSERT_EQ(is_zero(m2), zero_module);
    ASSERT_EQ(is_zero(m3), zero_module);
    if (zero_module) continue;
    EXPECT_EQ(grade(m1), grade(m2));
    EXPECT_EQ(grade(m1), grade(m3));
    EXPECT_EQ(hilbert_dimension(m1), hilbert_dimension(m2));
    EXPECT_EQ(hilbert_dimension(m1), hilbert_dimension(m3));
    EXPECT_EQ(char_cycle(m1), char_cycle(m2)) << p.to_string() << " ; " << q.to_string();
    EXPECT_EQ(char_cycle(m1), char_cycle(m3));
  }
}
