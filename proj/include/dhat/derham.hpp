#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dhat/factor.hpp"
#include "dhat/lattice.hpp"
#include "dhat/linalg.hpp"

namespace dhat {

/// DR^s(M) = sum over |I| = s of M dx_I with
/// delta(m dx_I) = sum_i d_i m dx_i ^ dx_I.
template <Field F>
class DeRhamComplex {
 public:
  using Form = std::vector<FreeVector<F>>;  // one entry per copy, in copy order

  explicit DeRhamComplex(PresentedModule<F> m) : m_(std::move(m)) {
    if (m_.side() == Side::Right) throw Error(ErrorCode::RightModule, "the de Rham complex needs a left module");
    detail::require_field(m_.algebra(), "dr_complex");
    const int n = m_.algebra().n;
    copies_.resize(static_cast<std::size_t>(n) + 1);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> idx;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) idx.push_back(i);
      copies_[idx.size()].push_back(idx);
    }
    for (auto& c : copies_) std::sort(c.begin(), c.end());
  }

  const PresentedModule<F>& module() const { return m_; }
  int ambient() const { return m_.algebra().n; }
  /// Multi-indices I (0-based, increasing) of the copies in degree s.
  const std::vector<std::vector<int>>& copies(int s) const { return copies_.at(static_cast<std::size_t>(s)); }
  std::size_t multiplicity(int s) const { return copies(s).size(); }

  Form zero_form(int s) const { return Form(multiplicity(s), FreeVector<F>(m_.algebra(), m_.rank())); }

  /// Applies delta: DR^s -> DR^{s+1} to representatives.
  Form differential(int s, const Form& w) const {
    if (s < 0 || s >= ambient()) throw Error(ErrorCode::IndexOutOfRange, "no differential out of degree " + std::to_string(s));
    if (w.size() != multiplicity(s)) throw Error(ErrorCode::RankMismatch, "form has the wrong number of components");
    Form out = zero_form(s + 1);
    const auto& src = copies(s);
    const auto& dst = copies(s + 1);
    for (std::size_t k = 0; k < src.size(); ++k) {
      for (int i = 0; i < ambient(); ++i) {
        if (std::find(src[k].begin(), src[k].end(), i) != src[k].end()) continue;
        int before = 0;
        for (int j : src[k])
          if (j < i) ++before;
        std::vector<int> target = src[k];
        target.insert(std::upper_bound(target.begin(), target.end(), i), i);
        const std::size_t t = static_cast<std::size_t>(std::find(dst.begin(), dst.end(), target) - dst.begin());
        FreeVector<F> term = WeylElement<F>::d(m_.algebra(), i) * w[k];
        if (before % 2) out[t] -= term;
        else out[t] += term;
      }
    }
    return out;
  }

 private:
  PresentedModule<F> m_;
  std::vector<std::vector<std::vector<int>>> copies_;
};

template <Field F>
DeRhamComplex<F> dr_complex(const PresentedModule<F>& m) {
  return DeRhamComplex<F>(m);
}

struct BFunction {
  UPoly polynomial;  // in s, monic
  std::vector<Integer> integer_roots;

  std::string to_string() const { return polynomial.to_string("s"); }
};

enum class Provenance : std::uint8_t { DirectN1, ViaReduction, Transfer };

inline std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::DirectN1: return "DirectN1";
    case Provenance::ViaReduction: return "ViaReduction";
    case Provenance::Transfer: return "Transfer";
  }
  return "?";
}

struct CohomologyReport {
  std::optional<std::vector<long>> dims;
  long chi = 0;
  Provenance provenance = Provenance::DirectN1;
};

namespace detail {

/// Groebner basis for the V-order along x1, computed in the homogenized
/// algebra and dehomogenized.
struct VBasis {
  Algebra alg;
  std::size_t rank = 0;
  TermOrder ord = TermOrder::v_order(true);
  std::vector<ModPoly<Rational>> elems;
};

inline VBasis v_basis(const PresentedModule<Rational>& m) {
  const Algebra w = m.algebra();
  const Algebra wh{w.n, RingTag::Homogenized};
  std::vector<FreeVector<Rational>> hom;
  for (const auto& r : m.relations().rows) {
    int d = 0;
    for (const auto& e : r.entries())
      if (!e.is_zero()) d = std::max(d, e.bernstein_degree());
    hom.push_back(convert_vector<Rational, Rational>(r, wh, [&](const WeylElement<Rational>& e) {
      return e.is_zero() ? WeylElement<Rational>(wh) : homogenize(e, d);
    }));
  }
  auto gb = buchberger(wh, m.rank(), hom, TermOrder::v_order(false));
  VBasis vb{w, m.rank(), TermOrder::v_order(true), {}};
  for (const auto& g : gb.generators()) {
    auto v = convert_vector<Rational, Rational>(g, w, [&](const WeylElement<Rational>& e) {
      return e.is_zero() ? WeylElement<Rational>(w) : dehomogenize(e);
    });
    auto p = to_modpoly(v, vb.ord);
    make_monic(p);
    vb.elems.push_back(std::move(p));
  }
  return vb;
}

/// Normal form modulo the relations with every term of x-weight above cap
/// discarded.
inline ModPoly<Rational> v_reduce(const VBasis& vb, ModPoly<Rational> f, int cap) {
  ModPoly<Rational> out;
  auto& work = f.terms;
  while (!work.empty()) {
    const auto t = work.front();
    if (TermOrder::x_weight(t.mon.m) > cap) break;
    const ModPoly<Rational>* by = nullptr;
    for (const auto& g : vb.elems)
      if (mon_divides(g.lead().mon, t.mon)) {
        by = &g;
        break;
      }
    if (!by) {
      out.terms.push_back(t);
      work.erase(work.begin());
      continue;
    }
    auto mult = left_monomial_multiple(vb.alg, by->lead().mon.m.cofactor_in(t.mon.m), *by, vb.ord);
    work = sub_scaled(work, 0, t.coef, mult, vb.ord);
  }
  return out;
}

/// Standard monomials x^i d^j (i - j = u) in component comp.
inline std::vector<ModMonomial> v_standard(const VBasis& vb, int comp, int u) {
  long bound = -1;
  for (const auto& g : vb.elems) {
    const auto& l = g.lead().mon;
    if (l.comp != comp) continue;
    long need = std::max<long>(l.m.d[0], static_cast<long>(l.m.x[0]) - u);
    bound = bound < 0 ? need : std::min(bound, need);
  }
  if (bound < 0) throw Error(ErrorCode::NotHolonomic, "component with no relation: weight pieces are infinite");
  std::vector<ModMonomial> out;
  for (long j = std::max(0, -u); j < bound; ++j) {
    WeylMonomial m;
    m.d[0] = static_cast<std::uint16_t>(j);
    m.x[0] = static_cast<std::uint16_t>(j + u);
    out.push_back(ModMonomial{comp, m});
  }
  return out;
}

inline void require_holonomic_n1(const PresentedModule<Rational>& m, const char* what) {
  if (m.algebra().tag != RingTag::RationalField)
    throw Error(ErrorCode::RingMismatch, std::string(what) + " needs rational coefficients");
  if (m.side() == Side::Right) throw Error(ErrorCode::RightModule, std::string(what) + " needs a left module");
  if (m.algebra().n != 1) throw Error(ErrorCode::UnsupportedAmbient, std::string(what) + " is implemented for n = 1");
  if (!is_minimal_dimension(m)) throw Error(ErrorCode::NotHolonomic, std::string(what) + " needs a holonomic module");
}

/// Matrix of left multiplication by u from the basis `from` into the basis
/// `to`, computed modulo the relations and modulo x-weights above cap.
inline DenseMatrix<Rational> v_action(const VBasis& vb, const WeylElement<Rational>& u, const std::vector<ModMonomial>& from,
                                      const std::vector<ModMonomial>& to, int cap) {
  DenseMatrix<Rational> a(from.size(), to.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    FreeVector<Rational> v(vb.alg, vb.rank);
    v[static_cast<std::size_t>(from[i].comp)] = u * WeylElement<Rational>::monomial(vb.alg, from[i].m);
    auto r = v_reduce(vb, to_modpoly(v, vb.ord), cap);
    for (const auto& t : r.terms) {
      auto pos = std::find(to.begin(), to.end(), t.mon);
      if (pos == to.end()) throw Error(ErrorCode::ConstructionFailed, "normal form left the weight window");
      a(i, static_cast<std::size_t>(pos - to.begin())) += t.coef;
    }
  }
  return a;
}

}  // namespace detail

/// b-function of M along x = 0 for the V-filtration with generators in
/// weight 0: minimal polynomial of x d on gr^V_0(M).
inline BFunction b_function_along_x(const PresentedModule<Rational>& m) {
  detail::require_holonomic_n1(m, "b_function_along_x");
  BFunction b{UPoly(1), {}};
  if (is_zero(m)) return b;
  auto vb = detail::v_basis(m);
  std::vector<ModMonomial> basis;
  for (std::size_t c = 0; c < m.rank(); ++c) {
    auto part = detail::v_standard(vb, static_cast<int>(c), 0);
    basis.insert(basis.end(), part.begin(), part.end());
  }
  const Algebra& w = m.algebra();
  auto theta = WeylElement<Rational>::x(w, 0) * WeylElement<Rational>::d(w, 0);
  auto a = detail::v_action(vb, theta, basis, basis, 0);
  b.polynomial = minimal_polynomial(a);
  b.integer_roots = integer_roots(b.polynomial);
  return b;
}

/// Fourier transform x -> d, d -> -x applied to the relations.
inline PresentedModule<Rational> fourier_transform(const PresentedModule<Rational>& m) {
  return PresentedModule<Rational>(convert_matrix<Rational, Rational>(m.relations(), m.algebra(),
                                                                      [](const WeylElement<Rational>& e) { return e.fourier(); }),
                                   m.side());
}

/// H^0 and H^1 of [M --d--> M] for holonomic M over W_1(Q): kernel and
/// cokernel of x on the Fourier transform, read off between the extreme
/// integer roots of its b-function.
inline CohomologyReport h_dr_n1(const PresentedModule<Rational>& m) {
  detail::require_holonomic_n1(m, "h_dr_n1");
  CohomologyReport rep;
  rep.provenance = Provenance::DirectN1;
  if (is_zero(m)) {
    rep.dims = std::vector<long>{0, 0};
    return rep;
  }
  auto nmod = fourier_transform(m);
  auto b = b_function_along_x(nmod);
  if (b.integer_roots.empty()) {
    rep.dims = std::vector<long>{0, 0};
    return rep;
  }
  // x : G_u -> G_{u+1} is bijective unless u = -1 - rho for an integer root rho.
  long lo = -1 - b.integer_roots.back().get_si();
  long hi = -1 - b.integer_roots.front().get_si() + 1;
  auto vb = detail::v_basis(nmod);
  std::vector<ModMonomial> a_basis, b_basis;
  for (std::size_t c = 0; c < nmod.rank(); ++c) {
    for (long u = lo; u < hi; ++u) {
      auto part = detail::v_standard(vb, static_cast<int>(c), static_cast<int>(u));
      a_basis.insert(a_basis.end(), part.begin(), part.end());
    }
    for (long u = lo + 1; u <= hi; ++u) {
      auto part = detail::v_standard(vb, static_cast<int>(c), static_cast<int>(u));
      b_basis.insert(b_basis.end(), part.begin(), part.end());
    }
  }
  auto xmap = detail::v_action(vb, WeylElement<Rational>::x(nmod.algebra(), 0), a_basis, b_basis, static_cast<int>(hi));
  const long rk = static_cast<long>(rank(xmap));
  rep.dims = std::vector<long>{static_cast<long>(a_basis.size()) - rk, static_cast<long>(b_basis.size()) - rk};
  rep.chi = (*rep.dims)[0] - (*rep.dims)[1];
  return rep;
}

/// Euler characteristic of the completed module through the reduction of a
/// lattice; only chi is reported.
inline CohomologyReport chi_via_reduction(const IntegralPresentation& p) {
  if (p.algebra().n != 1) throw Error(ErrorCode::UnsupportedAmbient, "chi_via_reduction is implemented for n = 1");
  if (!minimal_dimension_via_reduction(p))
    throw Error(ErrorCode::NotMinimalDimension, "chi transfer needs a module whose reduction has minimal dimension");
  auto red = reduce_mod_z(make_lattice(p));
  CohomologyReport rep;
  rep.provenance = Provenance::Transfer;
  rep.chi = red.is_zero ? 0 : h_dr_n1(red.reduced).chi;
  return rep;
}

}  // namespace dhat
