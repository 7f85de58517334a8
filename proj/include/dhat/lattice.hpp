#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dhat/char_cycle.hpp"
#include "dhat/convert.hpp"
#include "dhat/module.hpp"
#include "dhat/saturation.hpp"

namespace dhat {

/// Presentation over W_n(Q[z]) (central exponent = power of z) standing for
/// a module over the completed algebra.
struct IntegralPresentation {
  WeylMatrix<Rational> relations;
  Side side = Side::Left;
  bool saturated = false;

  const Algebra& algebra() const { return relations.alg; }
  std::size_t rank() const { return relations.cols; }
  PresentedModule<Rational> as_module() const { return PresentedModule<Rational>(relations, side); }
};

namespace detail {

inline UPoly lcm(const UPoly& a, const UPoly& b) { return UPoly::exact_div(a * b, UPoly::gcd(a, b)).monic(); }

/// Clears denominators of a row and removes its common power of z.
inline FreeVector<Rational> integral_row(const FreeVector<LocalScalar>& v) {
  UPoly den(1);
  long val = kInfiniteValuation;
  for (const auto& e : v.entries())
    for (const auto& [m, c] : e.terms()) den = lcm(den, c.denominator());
  const LocalScalar scale(den);
  std::vector<WeylElement<LocalScalar>> scaled;
  for (const auto& e : v.entries()) {
    scaled.push_back(e.scaled(scale));
    for (const auto& [m, c] : scaled.back().terms()) val = std::min(val, c.valuation());
  }
  Algebra target{v.algebra().n, RingTag::PolynomialZ};
  std::vector<WeylElement<Rational>> out;
  for (auto& e : scaled) {
    if (val > 0 && val != kInfiniteValuation) e = e.scaled(LocalScalar(UPoly(1), UPoly::monomial(static_cast<std::size_t>(val))));
    WeylElement<Rational> r = to_polynomial_z(e);
    out.push_back(r.is_zero() ? WeylElement<Rational>(target) : r);
  }
  return FreeVector<Rational>(target, std::move(out));
}

inline Algebra rational_algebra(const Algebra& a) { return Algebra{a.n, RingTag::RationalField}; }

inline PresentedModule<Rational> reduce_presentation(const PresentedModule<Rational>& m) {
  const Algebra target = rational_algebra(m.algebra());
  return PresentedModule<Rational>(
      convert_matrix<Rational, Rational>(m.relations(), target, [](const WeylElement<Rational>& e) { return reduce_mod_z(e); }),
      m.side());
}

}  // namespace detail

/// Row-wise integral form of a presentation over W_n(Q(z)).
inline IntegralPresentation integralize(const WeylMatrix<LocalScalar>& m, Side side = Side::Left) {
  IntegralPresentation p;
  p.relations = WeylMatrix<Rational>(Algebra{m.alg.n, RingTag::PolynomialZ}, m.cols);
  for (const auto& r : m.rows) {
    if (r.is_zero()) continue;
    p.relations.rows.push_back(detail::integral_row(r));
  }
  p.side = side;
  return p;
}

/// Replaces the relations by their z-saturation.
inline IntegralPresentation make_lattice(IntegralPresentation p) {
  if (!p.saturated) {
    p.relations = WeylMatrix<Rational>(p.algebra(), p.rank(), saturate_z(p.algebra(), p.rank(), p.relations.rows));
    p.saturated = true;
  }
  return p;
}

struct ReductionReport {
  PresentedModule<Rational> reduced;
  bool is_zero = false;
  std::optional<CharCycle> char_cycle_of_reduction;
  std::optional<bool> minimal_dimension_verdict;
};

/// L/zL for a saturated lattice. A zero reduction forces the completed
/// module itself to be zero.
inline ReductionReport reduce_mod_z(const IntegralPresentation& p) {
  if (!p.saturated) throw Error(ErrorCode::NotSaturated, "reduction needs a z-saturated lattice");
  ReductionReport r{detail::reduce_presentation(p.as_module()), false, std::nullopt, std::nullopt};
  r.is_zero = is_zero(r.reduced);
  if (r.is_zero) return r;
  r.minimal_dimension_verdict = is_minimal_dimension(r.reduced);
  try {
    r.char_cycle_of_reduction = char_cycle(r.reduced);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedAmbient) throw;
  }
  return r;
}

inline bool minimal_dimension_via_reduction(const IntegralPresentation& p) {
  auto r = reduce_mod_z(make_lattice(p));
  return r.is_zero || *r.minimal_dimension_verdict;
}

/// Integral Ext^i as an integral presentation (opposite side, unsaturated).
inline IntegralPresentation integral_ext(int i, const IntegralPresentation& p) {
  auto e = ext(i, p.as_module());
  return IntegralPresentation{e.relations(), e.side(), false};
}

/// Double integral dual: V = Ext^n(L) modulo z-torsion, then Ext^n(V) modulo
/// z-torsion.
inline IntegralPresentation good_lattice(const IntegralPresentation& p) {
  if (!minimal_dimension_via_reduction(p))
    throw Error(ErrorCode::NotMinimalDimension, "good_lattice needs a module whose reduction has minimal dimension");
  const int n = p.algebra().n;
  auto l0 = make_lattice(p);
  auto v = make_lattice(integral_ext(n, l0));
  auto l = make_lattice(integral_ext(n, v));
  auto red = reduce_mod_z(l);
  if (!red.is_zero && !*red.minimal_dimension_verdict)
    throw Error(ErrorCode::ConstructionFailed, "good_lattice output does not reduce to a module of minimal dimension");
  return l;
}

/// A lattice inside the module W_n(Q[z])^m / N, spanned by the given vectors
/// (all unit vectors when none are given).
struct LatticeSpec {
  IntegralPresentation ambient;
  std::vector<FreeVector<Rational>> generators;
};

inline LatticeSpec lattice_in(const IntegralPresentation& ambient, std::vector<FreeVector<Rational>> gens = {}) {
  if (gens.empty())
    for (std::size_t k = 0; k < ambient.rank(); ++k) gens.push_back(FreeVector<Rational>::unit(ambient.algebra(), ambient.rank(), k));
  return LatticeSpec{make_lattice(ambient), std::move(gens)};
}

/// Saturated presentation of the span of the generators inside the ambient.
inline IntegralPresentation lattice_presentation(const LatticeSpec& s) {
  const Algebra& alg = s.ambient.algebra();
  auto rel = modulo(alg, s.ambient.rank(), s.generators, s.ambient.relations.rows);
  IntegralPresentation p{WeylMatrix<Rational>(alg, s.generators.size(), std::move(rel)), s.ambient.side, false};
  return make_lattice(p);
}

struct LatticeComparison {
  ReductionReport first;
  ReductionReport second;
  int z_power_first_in_second = 0;
  int z_power_second_in_first = 0;
  bool equal = false;
  long multiplicity_first = 0;
  long multiplicity_second = 0;
};

namespace detail {

/// Least a <= bound with z^a * g in span(h) + N for every g, or -1.
inline int containment_power(const Algebra& alg, std::size_t rank, const std::vector<FreeVector<Rational>>& g,
                             const std::vector<FreeVector<Rational>>& h, const std::vector<FreeVector<Rational>>& n,
                             int bound) {
  std::vector<FreeVector<Rational>> span = h;
  span.insert(span.end(), n.begin(), n.end());
  auto gb = buchberger(alg, rank, span);
  int worst = 0;
  for (const auto& v : g) {
    int a = 0;
    FreeVector<Rational> w = v;
    const auto z = WeylElement<Rational>::central(alg);
    while (!gb.contains(w)) {
      if (++a > bound) return -1;
      w = z * w;
    }
    worst = std::max(worst, a);
  }
  return worst;
}

}  // namespace detail

/// Checks that two lattices span the same module over Q(z), z^a P in Q and
/// z^b Q in P with a, b <= zpower, then compares the reductions.
inline LatticeComparison compare_lattices(const LatticeSpec& p, const LatticeSpec& q, int zpower = 8) {
  const Algebra& alg = p.ambient.algebra();
  const std::size_t m = p.ambient.rank();
  if (!(q.ambient.algebra() == alg) || q.ambient.rank() != m ||
      !same_submodule(alg, m, p.ambient.relations.rows, q.ambient.relations.rows))
    throw Error(ErrorCode::NotSameModule, "lattices live in different modules");
  LatticeComparison c;
  c.z_power_first_in_second = detail::containment_power(alg, m, p.generators, q.generators, p.ambient.relations.rows, zpower);
  c.z_power_second_in_first = detail::containment_power(alg, m, q.generators, p.generators, p.ambient.relations.rows, zpower);
  if (c.z_power_first_in_second < 0 || c.z_power_second_in_first < 0)
    throw Error(ErrorCode::NotSameModule, "lattice containment fails within z^" + std::to_string(zpower));
  c.first = reduce_mod_z(lattice_presentation(p));
  c.second = reduce_mod_z(lattice_presentation(q));
  if (c.first.char_cycle_of_reduction) c.multiplicity_first = c.first.char_cycle_of_reduction->total_multiplicity();
  if (c.second.char_cycle_of_reduction) c.multiplicity_second = c.second.char_cycle_of_reduction->total_multiplicity();
  if (c.first.is_zero || c.second.is_zero) c.equal = c.first.is_zero && c.second.is_zero;
  else c.equal = c.first.char_cycle_of_reduction && c.second.char_cycle_of_reduction &&
                 *c.first.char_cycle_of_reduction == *c.second.char_cycle_of_reduction;
  return c;
}

struct KunnethTerm {
  PresentedModule<Rational> module;
  bool is_zero = false;
  std::optional<CharCycle> cycle;
  std::optional<int> dimension;
};

struct KunnethReport {
  int index = 0;
  KunnethTerm reduced_integral_ext;   // (a)
  KunnethTerm ext_of_reduction;       // (b)
  KunnethTerm tor;                    // (c)
  bool zero_pattern_holds = false;
  std::optional<bool> additivity_holds;
  bool tor_routes_agree = false;
};

namespace detail {

inline KunnethTerm kunneth_term(PresentedModule<Rational> m) {
  KunnethTerm t{std::move(m), false, std::nullopt, std::nullopt};
  t.is_zero = is_zero(t.module);
  if (t.is_zero) return t;
  t.dimension = hilbert_dimension(t.module);
  try {
    t.cycle = char_cycle(t.module);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedAmbient) throw;
  }
  return t;
}

}  // namespace detail

/// 0 -> Ext^i(L) (x) k -> Ext^i(L/zL) -> Tor_1(Ext^{i+1}(L), k) -> 0.
inline KunnethReport kunneth_check(const IntegralPresentation& p, int i) {
  if (!p.saturated) throw Error(ErrorCode::NotSaturated, "kunneth_check needs a z-saturated lattice");
  const int n = p.algebra().n;
  if (i < 0 || i > n + 1)
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " outside [0, " + std::to_string(n + 1) + "]");
  const Algebra alg = p.algebra();
  KunnethReport r;
  r.index = i;
  r.reduced_integral_ext = detail::kunneth_term(detail::reduce_presentation(ext(i, p.as_module())));

  auto reduction = detail::reduce_presentation(p.as_module());
  r.ext_of_reduction = detail::kunneth_term(i <= n ? ext(i, reduction) : PresentedModule<Rational>::zero(detail::rational_algebra(alg), opposite(p.side)));

  PresentedModule<Rational> next = i + 1 <= n + 1 ? ext(i + 1, p.as_module()) : PresentedModule<Rational>::zero(alg, opposite(p.side));
  const auto& nrel = next.relations().rows;
  const std::size_t nr = next.rank();
  std::vector<FreeVector<Rational>> torsion_gens, direct;
  if (nr > 0) {
    torsion_gens = colon_z(alg, nr, nrel);
    direct = colon_z_by_modulo(alg, nr, nrel);
  }
  r.tor_routes_agree = nr == 0 || same_submodule(alg, nr, torsion_gens, direct);
  PresentedModule<Rational> tor_int(WeylMatrix<Rational>(alg, torsion_gens.size(), modulo(alg, nr, torsion_gens, nrel)),
                                    next.side());
  r.tor = detail::kunneth_term(detail::reduce_presentation(tor_int));

  const bool a0 = r.reduced_integral_ext.is_zero, b0 = r.ext_of_reduction.is_zero, c0 = r.tor.is_zero;
  r.zero_pattern_holds = b0 == (a0 && c0);

  std::vector<const KunnethTerm*> live;
  for (const auto* t : {&r.reduced_integral_ext, &r.ext_of_reduction, &r.tor})
    if (!t->is_zero) live.push_back(t);
  bool comparable = true;
  for (const auto* t : live)
    if (!t->cycle || t->dimension != live.front()->dimension) comparable = false;
  if (comparable) {
    auto cyc = [](const KunnethTerm& t) { return t.is_zero ? CharCycle{} : *t.cycle; };
    r.additivity_holds = cyc(r.ext_of_reduction) == cyc(r.reduced_integral_ext) + cyc(r.tor);
  }
  return r;
}

/// Generic-fiber module over W_n(Q(z)) without completion. It can be nonzero
/// while the completed module vanishes.
struct GenericFiberDiagnostic {
  bool is_zero = false;
  std::optional<int> grade;
};

inline GenericFiberDiagnostic uncompleted_diagnostic(const WeylMatrix<LocalScalar>& m) {
  PresentedModule<LocalScalar> mod(m);
  GenericFiberDiagnostic d;
  d.is_zero = is_zero(mod);
  d.grade = dhat::grade(mod);
  return d;
}

}  // namespace dhat
