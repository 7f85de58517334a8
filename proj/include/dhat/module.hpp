#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dhat/convert.hpp"
#include "dhat/groebner.hpp"
#include "dhat/resolution.hpp"

namespace dhat {

enum class Side : std::uint8_t { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
inline std::string side_name(Side s) { return s == Side::Left ? "left" : "right"; }

/// Cokernel of the row span of a relation matrix. A right module is stored
/// through its transposed left module, so every algorithm runs on left
/// modules; to_string() renders the right-module relations.
template <Field F>
class PresentedModule {
 public:
  PresentedModule() = default;
  PresentedModule(WeylMatrix<F> relations, Side side = Side::Left) : rel_(std::move(relations)), side_(side) {
    for (const auto& r : rel_.rows)
      for (const auto& e : r.entries())
        if (!(e.algebra() == rel_.alg)) throw Error(ErrorCode::MixedAmbient, "relation entry from another algebra");
  }

  static PresentedModule free(const Algebra& alg, std::size_t rank, Side side = Side::Left) {
    return PresentedModule(WeylMatrix<F>(alg, rank), side);
  }
  static PresentedModule zero(const Algebra& alg, Side side = Side::Left) { return free(alg, 0, side); }
  static PresentedModule cyclic(const std::vector<WeylElement<F>>& relations, const Algebra& alg) {
    WeylMatrix<F> m(alg, 1);
    for (const auto& r : relations) m.rows.push_back(FreeVector<F>(alg, std::vector<WeylElement<F>>{r}));
    return PresentedModule(std::move(m));
  }

  const Algebra& algebra() const { return rel_.alg; }
  Side side() const { return side_; }
  std::size_t rank() const { return rel_.cols; }
  const WeylMatrix<F>& relations() const { return rel_; }

  GroebnerBasis<F> relation_basis() const { return buchberger(rel_.alg, rel_.cols, rel_.rows); }

  std::string to_string() const {
    std::string s = side_name(side_) + " module, " + std::to_string(rank()) + " generator(s), relations ";
    if (side_ == Side::Left) return s + rel_.to_string();
    WeylMatrix<F> shown(rel_.alg, rel_.cols);
    for (const auto& r : rel_.rows)
      shown.rows.push_back(map_entries(r, [](const WeylElement<F>& e) { return e.transpose(); }));
    return s + shown.to_string();
  }

 private:
  WeylMatrix<F> rel_;
  Side side_ = Side::Left;
};

/// Removes generators killed by a relation with a unit entry.
template <Field F>
PresentedModule<F> prune(const PresentedModule<F>& m) {
  const Algebra alg = m.algebra();
  std::vector<FreeVector<F>> rows = m.relations().compressed().rows;
  std::size_t cols = m.rank();
  for (;;) {
    std::size_t pi = rows.size(), pj = 0;
    for (std::size_t i = 0; i < rows.size() && pi == rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (rows[i][j].is_unit_scalar()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows.size()) break;
    const F u = rows[pi][pj].terms().front().second;
    FreeVector<F> pivot = WeylElement<F>::constant(alg, u.inverse()) * rows[pi];
    std::vector<FreeVector<F>> next;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pi) continue;
      FreeVector<F> r = rows[i];
      if (!r[pj].is_zero()) r -= r[pj] * pivot;
      std::vector<WeylElement<F>> kept;
      for (std::size_t j = 0; j < cols; ++j)
        if (j != pj) kept.push_back(r[j]);
      FreeVector<F> shrunk(alg, std::move(kept));
      if (!shrunk.is_zero()) next.push_back(std::move(shrunk));
    }
    rows = std::move(next);
    --cols;
  }
  return PresentedModule<F>(WeylMatrix<F>(alg, cols, std::move(rows)), m.side());
}

/// Zero test: the relations span the whole free module.
template <Field F>
bool is_zero(const PresentedModule<F>& m) {
  if (m.rank() == 0) return true;
  return m.relation_basis().is_everything();
}

namespace detail {

inline void require_field(const Algebra& alg, const char* what) {
  if (!alg.is_field()) throw Error(ErrorCode::RingMismatch, std::string(what) + " needs field coefficients, got " + ring_name(alg.tag));
}

/// Largest |U| with U a set of symbol variables containing the support of no
/// leading monomial in a single component.
inline int independent_set_size(int n, const std::vector<WeylMonomial>& leads) {
  const int vars = 2 * n;
  int best = 0;
  for (unsigned mask = 0; mask < (1u << vars); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (int i = 0; i < n && inside; ++i) {
        if (m.x[i] > 0 && !(mask & (1u << i))) inside = false;
        if (m.d[i] > 0 && !(mask & (1u << (n + i)))) inside = false;
      }
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace detail

/// Krull dimension of gr(M) for the Bernstein filtration with generators in
/// degree 0.
template <Field F>
int hilbert_dimension(const PresentedModule<F>& m) {
  detail::require_field(m.algebra(), "hilbert_dimension");
  auto gb = m.relation_basis();
  if (m.rank() == 0 || gb.is_everything()) throw Error(ErrorCode::ZeroModule, "hilbert_dimension of the zero module");
  std::vector<std::vector<WeylMonomial>> by_comp(m.rank());
  for (const auto& lm : gb.leading_monomials()) by_comp[static_cast<std::size_t>(lm.comp)].push_back(lm.m);
  int dim = 0;
  for (const auto& leads : by_comp) dim = std::max(dim, detail::independent_set_size(m.algebra().n, leads));
  return dim;
}

/// Largest i for which Ext^i can be nonzero: the global dimension.
inline int homological_bound(const Algebra& alg) {
  if (alg.is_field()) return alg.n;
  if (alg.tag == RingTag::PolynomialZ) return alg.n + 1;
  throw Error(ErrorCode::RingMismatch, "no homological bound for " + ring_name(alg.tag));
}

/// Ext^i from a resolution computed to length i + 1 (or complete), as a
/// module of the opposite side.
template <Field F>
PresentedModule<F> ext_from_resolution(const FreeResolution<F>& res, std::size_t i, Side side) {
  const Algebra alg = res.alg;
  const Side opp = opposite(side);
  if (i > res.maps.size() || res.ranks[i] == 0) return PresentedModule<F>::zero(alg, opp);
  const std::size_t ri = res.ranks[i];
  std::vector<FreeVector<F>> image;
  if (i > 0) image = transpose_dual(res.maps[i - 1]).rows;
  if (i == res.maps.size()) return prune(PresentedModule<F>(WeylMatrix<F>(alg, ri, std::move(image)), opp));
  auto dual_next = transpose_dual(res.maps[i]);
  auto kernel = syzygies(alg, dual_next.cols, dual_next.rows);
  if (kernel.empty()) return PresentedModule<F>::zero(alg, opp);
  auto rel = modulo(alg, ri, kernel, image);
  return prune(PresentedModule<F>(WeylMatrix<F>(alg, kernel.size(), std::move(rel)), opp));
}

template <Field F>
PresentedModule<F> ext(int i, const PresentedModule<F>& m) {
  const int bound = homological_bound(m.algebra());
  if (i < 0 || i > bound)
    throw Error(ErrorCode::IndexOutOfRange, "Ext index " + std::to_string(i) + " outside [0, " + std::to_string(bound) + "]");
  auto res = free_resolution(m.relations(), static_cast<std::size_t>(i) + 1);
  return ext_from_resolution(res, static_cast<std::size_t>(i), m.side());
}

/// Ext^0 .. Ext^bound from one resolution.
template <Field F>
std::vector<PresentedModule<F>> ext_all(const PresentedModule<F>& m) {
  const int bound = homological_bound(m.algebra());
  auto res = free_resolution(m.relations(), static_cast<std::size_t>(bound) + 1);
  std::vector<PresentedModule<F>> out;
  for (int i = 0; i <= bound; ++i) out.push_back(ext_from_resolution(res, static_cast<std::size_t>(i), m.side()));
  return out;
}

/// Least i with Ext^i(M) nonzero; nullopt stands for +infinity (M = 0).
template <Field F>
std::optional<int> grade(const PresentedModule<F>& m) {
  if (is_zero(m)) return std::nullopt;
  const int bound = homological_bound(m.algebra());
  auto res = free_resolution(m.relations(), static_cast<std::size_t>(bound) + 1);
  for (int i = 0; i <= bound; ++i)
    if (!is_zero(ext_from_resolution(res, static_cast<std::size_t>(i), m.side()))) return i;
  throw Error(ErrorCode::ConstructionFailed, "nonzero module with all Ext groups zero");
}

/// grade(M) = n, cross-checked against grade + dim gr(M) = 2n. The zero
/// module counts as minimal dimensional.
template <Field F>
bool is_minimal_dimension(const PresentedModule<F>& m) {
  detail::require_field(m.algebra(), "is_minimal_dimension");
  const int n = m.algebra().n;
  auto g = grade(m);
  if (!g) return true;
  const bool by_grade = *g == n;
  const int dim = hilbert_dimension(m);
  if (*g + dim != 2 * n)
    throw Error(ErrorCode::ConstructionFailed, "grade " + std::to_string(*g) + " and dimension " + std::to_string(dim) +
                                                   " violate grade + dim = 2n");
  return by_grade;
}

/// M* = Ext^n(M), defined for minimal-dimensional M.
template <Field F>
PresentedModule<F> dual_star(const PresentedModule<F>& m) {
  if (!is_minimal_dimension(m)) throw Error(ErrorCode::NotMinimalDimension, "dual_star needs a module of minimal dimension");
  return ext(m.algebra().n, m);
}

}  // namespace dhat
