#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dhat/free_vector.hpp"
#include "dhat/term_order.hpp"

namespace dhat {

/// Counters for the last computations on this thread (reported with --stats).
struct EngineStats {
  std::size_t bases = 0;
  std::size_t spairs = 0;
  std::size_t zero_reductions = 0;
  std::size_t chain_pruned = 0;
  std::size_t max_basis = 0;
};

inline EngineStats& engine_stats() {
  thread_local EngineStats stats;
  return stats;
}

/// Bernstein-degree ceiling for basis elements on this thread; 0 means none.
inline int& degree_limit() {
  thread_local int limit = 0;
  return limit;
}

template <Field F>
struct ModTerm {
  ModMonomial mon;
  F coef;
};

/// Module element as a list of terms sorted in decreasing order for a fixed
/// TermOrder. Only meaningful together with that order.
template <Field F>
struct ModPoly {
  std::vector<ModTerm<F>> terms;

  bool is_zero() const { return terms.empty(); }
  const ModTerm<F>& lead() const { return terms.front(); }
};

namespace detail {

template <Field F>
void sort_and_combine(std::vector<ModTerm<F>>& ts, const TermOrder& ord) {
  std::sort(ts.begin(), ts.end(),
            [&ord](const ModTerm<F>& a, const ModTerm<F>& b) { return ord.greater(a.mon, b.mon); });
  std::vector<ModTerm<F>> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.empty() && out.back().mon == t.mon) {
      out.back().coef += t.coef;
      continue;
    }
    if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
    out.push_back(std::move(t));
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  ts = std::move(out);
}

template <Field F>
ModPoly<F> to_modpoly(const FreeVector<F>& v, const TermOrder& ord, int comp_offset = 0) {
  ModPoly<F> p;
  for (std::size_t i = 0; i < v.rank(); ++i)
    for (const auto& [m, c] : v[i].terms())
      p.terms.push_back({ModMonomial{static_cast<int>(i) + comp_offset, m}, c});
  std::sort(p.terms.begin(), p.terms.end(),
            [&ord](const ModTerm<F>& a, const ModTerm<F>& b) { return ord.greater(a.mon, b.mon); });
  return p;
}

template <Field F>
FreeVector<F> to_vector(const ModPoly<F>& p, const Algebra& alg, std::size_t rank) {
  std::vector<std::vector<typename WeylElement<F>::Term>> parts(rank);
  for (const auto& t : p.terms) parts[static_cast<std::size_t>(t.mon.comp)].emplace_back(t.mon.m, t.coef);
  std::vector<WeylElement<F>> entries;
  entries.reserve(rank);
  for (auto& part : parts) entries.push_back(WeylElement<F>::from_terms(alg, std::move(part)));
  return FreeVector<F>(alg, std::move(entries));
}

/// (q * g) with q a monomial, in decreasing order.
template <Field F>
std::vector<ModTerm<F>> left_monomial_multiple(const Algebra& alg, const WeylMonomial& q, const ModPoly<F>& g,
                                               const TermOrder& ord) {
  std::vector<ModTerm<F>> out;
  out.reserve(g.terms.size() * 2);
  for (const auto& t : g.terms) {
    multiply_monomials(alg, q, t.mon.m, [&](const WeylMonomial& m, const Integer& k) {
      out.push_back({ModMonomial{t.mon.comp, m}, k == 1 ? t.coef : t.coef * from_integer<F>(k)});
    });
  }
  sort_and_combine(out, ord);
  return out;
}

/// f - c * h, both decreasing.
template <Field F>
std::vector<ModTerm<F>> sub_scaled(const std::vector<ModTerm<F>>& f, std::size_t f_from, const F& c,
                                   const std::vector<ModTerm<F>>& h, const TermOrder& ord) {
  std::vector<ModTerm<F>> out;
  out.reserve(f.size() - f_from + h.size());
  std::size_t i = f_from, j = 0;
  while (i < f.size() || j < h.size()) {
    int cmp;
    if (i == f.size()) cmp = -1;
    else if (j == h.size()) cmp = 1;
    else cmp = ord.compare(f[i].mon, h[j].mon);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({h[j].mon, -(c * h[j].coef)});
      ++j;
    } else {
      F v = f[i].coef - c * h[j].coef;
      if (!v.is_zero()) out.push_back({f[i].mon, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <Field F>
void make_monic(ModPoly<F>& p) {
  if (p.is_zero()) return;
  F inv = p.lead().coef.inverse();
  for (auto& t : p.terms) t.coef = t.coef * inv;
}

inline bool mon_divides(const ModMonomial& a, const ModMonomial& b) {
  return a.comp == b.comp && a.m.divides(b.m);
}

}  // namespace detail

/// Reducer over a fixed list of module elements with monic leading terms.
template <Field F>
class Reducer {
 public:
  Reducer(Algebra alg, TermOrder ord) : alg_(alg), ord_(ord) {}

  const TermOrder& order() const { return ord_; }
  const Algebra& algebra() const { return alg_; }

  /// Remainder of left division. With full = false only the leading term is
  /// reduced (the result is zero or has an irreducible leading term).
  ModPoly<F> reduce(ModPoly<F> f, const std::vector<const ModPoly<F>*>& by, bool full = true) const {
    std::vector<ModTerm<F>> rem;
    std::vector<ModTerm<F>> cur = std::move(f.terms);
    std::size_t pos = 0;
    while (pos < cur.size()) {
      const ModTerm<F>& lt = cur[pos];
      const ModPoly<F>* g = nullptr;
      for (const ModPoly<F>* cand : by) {
        if (detail::mon_divides(cand->lead().mon, lt.mon)) {
          g = cand;
          break;
        }
      }
      if (g == nullptr) {
        if (!full) break;
        rem.push_back(lt);
        ++pos;
        continue;
      }
      WeylMonomial q = g->lead().mon.m.cofactor_in(lt.mon.m);
      F c = lt.coef / g->lead().coef;
      auto h = detail::left_monomial_multiple(alg_, q, *g, ord_);
      cur = detail::sub_scaled(cur, pos, c, h, ord_);
      pos = 0;
    }
    ModPoly<F> out;
    out.terms = std::move(rem);
    for (std::size_t k = pos; k < cur.size(); ++k) out.terms.push_back(std::move(cur[k]));
    return out;
  }

 private:
  Algebra alg_;
  TermOrder ord_;
};

/// Inter-reduced left Groebner basis of a submodule of W^rank, monic leads,
/// sorted by increasing leading monomial.
template <Field F>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(Algebra alg, std::size_t rank, TermOrder ord, std::vector<ModPoly<F>> elems)
      : alg_(alg), rank_(rank), ord_(ord), elems_(std::move(elems)) {}

  const Algebra& algebra() const { return alg_; }
  std::size_t rank() const { return rank_; }
  const TermOrder& order() const { return ord_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<ModPoly<F>>& elements() const { return elems_; }

  std::vector<FreeVector<F>> generators() const {
    std::vector<FreeVector<F>> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_) out.push_back(detail::to_vector(e, alg_, rank_));
    return out;
  }

  std::vector<ModMonomial> leading_monomials() const {
    std::vector<ModMonomial> out;
    for (const auto& e : elems_) out.push_back(e.lead().mon);
    return out;
  }

  ModPoly<F> reduce(ModPoly<F> f) const {
    Reducer<F> r(alg_, ord_);
    return r.reduce(std::move(f), pointers());
  }

  FreeVector<F> normal_form(const FreeVector<F>& v) const {
    if (v.rank() != rank_)
      throw Error(ErrorCode::RankMismatch, "vector of rank " + std::to_string(v.rank()) + " against basis of rank " +
                                               std::to_string(rank_));
    if (!(v.algebra() == alg_) && v.rank() > 0) throw Error(ErrorCode::MixedAmbient, "vector from another algebra");
    return detail::to_vector(reduce(detail::to_modpoly(v, ord_)), alg_, rank_);
  }

  bool contains(const FreeVector<F>& v) const { return normal_form(v).is_zero(); }

  bool contains_all(const std::vector<FreeVector<F>>& vs) const {
    for (const auto& v : vs)
      if (!contains(v)) return false;
    return true;
  }

  /// True iff the submodule is all of W^rank.
  bool is_everything() const {
    std::vector<bool> hit(rank_, false);
    for (const auto& e : elems_)
      if (e.lead().mon.m.is_one()) hit[static_cast<std::size_t>(e.lead().mon.comp)] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

 private:
  std::vector<const ModPoly<F>*> pointers() const {
    std::vector<const ModPoly<F>*> ps;
    ps.reserve(elems_.size());
    for (const auto& e : elems_) ps.push_back(&e);
    return ps;
  }

  Algebra alg_;
  std::size_t rank_ = 0;
  TermOrder ord_;
  std::vector<ModPoly<F>> elems_;
};

namespace detail {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  ModMonomial lcm;
};

inline bool properly_divides(const ModMonomial& a, const ModMonomial& b) {
  return mon_divides(a, b) && !(a == b);
}

}  // namespace detail

/// Buchberger completion with the normal selection strategy and the
/// Gebauer-Moeller chain criteria. The product criterion does not hold in
/// Weyl algebras and is not used.
template <Field F>
GroebnerBasis<F> buchberger(const Algebra& alg, std::size_t rank, const std::vector<FreeVector<F>>& generators,
                            const TermOrder& ord) {
  using detail::CriticalPair;
  EngineStats& stats = engine_stats();
  ++stats.bases;
  Reducer<F> red(alg, ord);

  std::vector<ModPoly<F>> basis;
  std::vector<bool> active;
  std::vector<CriticalPair> pairs;

  auto active_ptrs = [&]() {
    std::vector<const ModPoly<F>*> ps;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (active[k]) ps.push_back(&basis[k]);
    return ps;
  };

  auto insert = [&](ModPoly<F> h) {
    detail::make_monic(h);
    const ModMonomial lh = h.lead().mon;
    if (degree_limit() > 0 && lh.m.bernstein_degree() > degree_limit())
      throw Error(ErrorCode::ConstructionFailed,
                  "Groebner basis element of degree " + std::to_string(lh.m.bernstein_degree()) + " exceeds the limit " +
                      std::to_string(degree_limit()));
    const std::size_t hi = basis.size();

    std::vector<CriticalPair> fresh;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!active[k] || basis[k].lead().mon.comp != lh.comp) continue;
      fresh.push_back({k, hi, ModMonomial{lh.comp, WeylMonomial::lcm(basis[k].lead().mon.m, lh.m)}});
    }
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < fresh.size() && !drop; ++b)
        if (b != a && detail::properly_divides(fresh[b].lcm, fresh[a].lcm)) drop = true;
      for (const auto& k : kept)
        if (k.lcm == fresh[a].lcm) drop = true;
      if (drop) ++stats.chain_pruned;
      else kept.push_back(fresh[a]);
    }
    std::vector<CriticalPair> survivors;
    for (const auto& p : pairs) {
      if (detail::mon_divides(lh, p.lcm)) {
        ModMonomial li{lh.comp, WeylMonomial::lcm(basis[p.i].lead().mon.m, lh.m)};
        ModMonomial lj{lh.comp, WeylMonomial::lcm(basis[p.j].lead().mon.m, lh.m)};
        if (!(li == p.lcm) && !(lj == p.lcm)) {
          ++stats.chain_pruned;
          continue;
        }
      }
      survivors.push_back(p);
    }
    pairs = std::move(survivors);
    pairs.insert(pairs.end(), kept.begin(), kept.end());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (active[k] && detail::mon_divides(lh, basis[k].lead().mon)) active[k] = false;
    basis.push_back(std::move(h));
    active.push_back(true);
    stats.max_basis = std::max(stats.max_basis, basis.size());
  };

  for (const auto& g : generators) {
    if (g.rank() != rank) throw Error(ErrorCode::RankMismatch, "generator rank differs from ambient rank");
    ModPoly<F> p = red.reduce(detail::to_modpoly(g, ord), active_ptrs(), false);
    if (!p.is_zero()) insert(std::move(p));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (ord.less(pairs[k].lcm, pairs[best].lcm)) best = k;
    CriticalPair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    ++stats.spairs;

    const ModPoly<F>& gi = basis[p.i];
    const ModPoly<F>& gj = basis[p.j];
    auto si = detail::left_monomial_multiple(alg, gi.lead().mon.m.cofactor_in(p.lcm.m), gi, ord);
    auto sj = detail::left_monomial_multiple(alg, gj.lead().mon.m.cofactor_in(p.lcm.m), gj, ord);
    ModPoly<F> s;
    s.terms = detail::sub_scaled(si, 0, F::one(), sj, ord);
    s = red.reduce(std::move(s), active_ptrs(), false);
    if (s.is_zero()) {
      ++stats.zero_reductions;
      continue;
    }
    insert(std::move(s));
  }

  std::vector<ModPoly<F>> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (active[k]) minimal.push_back(std::move(basis[k]));
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const ModPoly<F>*> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(&minimal[l]);
    minimal[k] = red.reduce(std::move(minimal[k]), others, true);
    detail::make_monic(minimal[k]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&ord](const ModPoly<F>& a, const ModPoly<F>& b) { return ord.less(a.lead().mon, b.lead().mon); });
  return GroebnerBasis<F>(alg, rank, ord, std::move(minimal));
}

template <Field F>
GroebnerBasis<F> buchberger(const Algebra& alg, std::size_t rank, const std::vector<FreeVector<F>>& generators) {
  return buchberger(alg, rank, generators, TermOrder::deg_rev_lex());
}

template <Field F>
FreeVector<F> left_normal_form(const FreeVector<F>& v, const GroebnerBasis<F>& g) {
  return g.normal_form(v);
}

/// {c in W^k : sum_j c_j a_j lies in the submodule generated by b}, where the
/// a_j and b_l live in W^rank. With b empty these are the syzygies of a.
template <Field F>
std::vector<FreeVector<F>> modulo(const Algebra& alg, std::size_t rank, const std::vector<FreeVector<F>>& a,
                                  const std::vector<FreeVector<F>>& b) {
  const std::size_t k = a.size();
  if (k == 0) return {};
  std::vector<FreeVector<F>> aug;
  aug.reserve(a.size() + b.size());
  for (std::size_t j = 0; j < k; ++j)
    aug.push_back(FreeVector<F>::concat(a[j], FreeVector<F>::unit(alg, k, j)));
  for (const auto& v : b) aug.push_back(FreeVector<F>::concat(v, FreeVector<F>(alg, k)));
  auto gb = buchberger(alg, rank + k, aug, TermOrder::elimination(static_cast<int>(rank)));
  std::vector<FreeVector<F>> out;
  for (const auto& e : gb.elements()) {
    if (e.lead().mon.comp < static_cast<int>(rank)) continue;
    out.push_back(detail::to_vector(e, alg, rank + k).slice(rank, rank + k));
  }
  return out;
}

/// Generators of the left syzygy module of the given vectors.
template <Field F>
std::vector<FreeVector<F>> syzygies(const Algebra& alg, std::size_t rank, const std::vector<FreeVector<F>>& vs) {
  return modulo<F>(alg, rank, vs, {});
}

template <Field F>
std::vector<FreeVector<F>> syzygy_module(const GroebnerBasis<F>& g) {
  return syzygies(g.algebra(), g.rank(), g.generators());
}

/// Generators of span(a) intersected with span(b).
template <Field F>
std::vector<FreeVector<F>> intersect(const Algebra& alg, std::size_t rank, const std::vector<FreeVector<F>>& a,
                                     const std::vector<FreeVector<F>>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<FreeVector<F>> aug;
  for (const auto& v : a) aug.push_back(FreeVector<F>::concat(v, v));
  for (const auto& v : b) aug.push_back(FreeVector<F>::concat(v, FreeVector<F>(alg, rank)));
  auto gb = buchberger(alg, 2 * rank, aug, TermOrder::elimination(static_cast<int>(rank)));
  std::vector<FreeVector<F>> out;
  for (const auto& e : gb.elements()) {
    if (e.lead().mon.comp < static_cast<int>(rank)) continue;
    out.push_back(detail::to_vector(e, alg, 2 * rank).slice(rank, 2 * rank));
  }
  return out;
}

/// Mutual containment of two generated submodules.
template <Field F>
bool same_submodule(const Algebra& alg, std::size_t rank, const std::vector<FreeVector<F>>& a,
                    const std::vector<FreeVector<F>>& b) {
  auto ga = buchberger(alg, rank, a);
  auto gb = buchberger(alg, rank, b);
  return ga.contains_all(b) && gb.contains_all(a);
}

}  // namespace dhat
