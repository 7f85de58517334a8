#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dhat/factor.hpp"
#include "dhat/linalg.hpp"
#include "dhat/local_scalar.hpp"
#include "dhat/module.hpp"

namespace dhat {

/// One prime of the characteristic variety with its multiplicity. An empty
/// generator list is the zero ideal.
struct CycleComponent {
  std::vector<CommPoly<Rational>> generators;
  std::string label;
  int dimension = 0;
  long multiplicity = 0;
};

class CharCycle {
 public:
  CharCycle() = default;

  const std::vector<CycleComponent>& components() const { return comps_; }
  bool empty() const { return comps_.empty(); }

  void add(CycleComponent c) {
    if (c.multiplicity <= 0) return;
    for (auto& e : comps_)
      if (e.label == c.label) {
        e.multiplicity += c.multiplicity;
        return;
      }
    auto pos = std::lower_bound(comps_.begin(), comps_.end(), c.label,
                                [](const CycleComponent& a, const std::string& l) { return a.label < l; });
    comps_.insert(pos, std::move(c));
  }

  long total_multiplicity() const {
    long s = 0;
    for (const auto& c : comps_) s += c.multiplicity;
    return s;
  }

  /// Every component has the given dimension.
  bool pure_of_dimension(int d) const {
    return std::all_of(comps_.begin(), comps_.end(), [d](const CycleComponent& c) { return c.dimension == d; });
  }

  friend CharCycle operator+(CharCycle a, const CharCycle& b) {
    for (const auto& c : b.comps_) a.add(c);
    return a;
  }

  friend bool operator==(const CharCycle& a, const CharCycle& b) {
    if (a.comps_.size() != b.comps_.size()) return false;
    for (std::size_t i = 0; i < a.comps_.size(); ++i)
      if (a.comps_[i].label != b.comps_[i].label || a.comps_[i].multiplicity != b.comps_[i].multiplicity) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      if (i) s += ", ";
      s += comps_[i].label + ": " + std::to_string(comps_[i].multiplicity);
    }
    return s + "}";
  }

 private:
  std::vector<CycleComponent> comps_;
};

namespace detail {

inline std::vector<std::string> symbol_variable_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) names.push_back("xi" + std::to_string(i + 1));
  return names;
}

/// Scales so that the lexicographically largest exponent has coefficient 1.
inline CommPoly<Rational> normalized(const CommPoly<Rational>& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.terms().rbegin()->second.inverse());
}

inline CycleComponent make_component(const CommPoly<Rational>& prime, int n, int dimension, long mult) {
  CycleComponent c;
  c.generators.push_back(normalized(prime));
  c.label = "(" + c.generators.front().to_string(symbol_variable_names(n)) + ")";
  c.dimension = dimension;
  c.multiplicity = mult;
  return c;
}

inline CycleComponent zero_ideal_component(int n, long mult) {
  CycleComponent c;
  c.label = "(0)";
  c.dimension = 2 * n;
  c.multiplicity = mult;
  return c;
}

/// Binary form sum q_i u^i w^(k-i) in the given pair of symbol variables.
inline CommPoly<Rational> homogenize_binary(const UPoly& q, std::size_t nvars, std::size_t u, std::size_t w) {
  CommPoly<Rational> f(nvars);
  const long k = q.degree();
  for (long i = 0; i <= k; ++i) {
    if (q.coeff(static_cast<std::size_t>(i)).is_zero()) continue;
    Exponents e(nvars, 0);
    e[u] = static_cast<std::uint16_t>(i);
    e[w] = static_cast<std::uint16_t>(k - i);
    f.add_term(e, q.coeff(static_cast<std::size_t>(i)));
  }
  return f;
}

inline CharCycle cycle_n1(const GroebnerBasis<Rational>& gb, std::size_t r) {
  // Initial forms in (x, xi), dehomogenized to t = x / xi, over Q(t).
  const std::size_t g = gb.size();
  std::vector<int> top(g, 0);
  DenseMatrix<LocalScalar> a(g, r);
  const auto gens = gb.generators();
  for (std::size_t k = 0; k < g; ++k) {
    int d = 0;
    for (const auto& e : gens[k].entries())
      if (!e.is_zero()) d = std::max(d, e.bernstein_degree());
    top[k] = d;
    for (std::size_t c = 0; c < r; ++c) {
      std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1);
      for (const auto& [m, v] : gens[k][c].terms())
        if (m.bernstein_degree() == d) coeffs[m.x[0]] += v;
      a(k, c) = LocalScalar(UPoly(std::move(coeffs)));
    }
  }
  CharCycle cyc;
  const std::size_t rk = rank(a);
  if (rk < r) {
    cyc.add(zero_ideal_component(1, static_cast<long>(r - rk)));
    return cyc;
  }
  UPoly gcd_poly;
  long xi_power = -1;
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  for (;;) {
    DenseMatrix<LocalScalar> minor(r, r);
    long degree = 0;
    for (std::size_t i = 0; i < r; ++i) {
      degree += top[pick[i]];
      for (std::size_t c = 0; c < r; ++c) minor(i, c) = a(pick[i], c);
    }
    LocalScalar det = determinant(minor);
    if (!det.is_zero()) {
      if (!det.is_polynomial()) throw Error(ErrorCode::ConstructionFailed, "non-polynomial minor");
      const UPoly& p = det.numerator();
      gcd_poly = gcd_poly.is_zero() ? p.monic() : UPoly::gcd(gcd_poly, p);
      const long e = degree - p.degree();
      xi_power = xi_power < 0 ? e : std::min(xi_power, e);
    }
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == g - r + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (xi_power > 0) {
    CommPoly<Rational> xi = CommPoly<Rational>::variable(2, 1);
    cyc.add(make_component(xi, 1, 1, xi_power));
  }
  for (const auto& f : factor_rational(gcd_poly))
    cyc.add(make_component(homogenize_binary(f.factor, 2, 0, 1), 1, 1, f.multiplicity));
  return cyc;
}

inline CharCycle cycle_principal(const WeylElement<Rational>& op, int n) {
  CommPoly<Rational> sigma = op.principal_symbol();
  const std::size_t nv = static_cast<std::size_t>(2 * n);
  const int dim = 2 * n - 1;
  CharCycle cyc;
  // Monomial content.
  Exponents content(nv, UINT16_MAX);
  for (const auto& [e, c] : sigma.terms())
    for (std::size_t v = 0; v < nv; ++v) content[v] = std::min(content[v], e[v]);
  CommPoly<Rational> rest(nv);
  for (const auto& [e, c] : sigma.terms()) {
    Exponents f = e;
    for (std::size_t v = 0; v < nv; ++v) f[v] = static_cast<std::uint16_t>(f[v] - content[v]);
    rest.add_term(f, c);
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (content[v] > 0) cyc.add(make_component(CommPoly<Rational>::variable(nv, v), n, dim, content[v]));
  const long k = rest.total_degree();
  if (k == 0) return cyc;
  if (k == 1) {
    cyc.add(make_component(rest, n, dim, 1));
    return cyc;
  }
  std::vector<std::size_t> used;
  for (std::size_t v = 0; v < nv; ++v)
    for (const auto& [e, c] : rest.terms())
      if (e[v] > 0) {
        used.push_back(v);
        break;
      }
  if (used.size() != 2)
    throw Error(ErrorCode::UnsupportedAmbient, "characteristic cycle of a principal symbol in more than two variables");
  const std::size_t u = used[0], w = used[1];
  std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
  for (const auto& [e, c] : rest.terms()) coeffs[e[u]] += c;
  for (const auto& f : factor_rational(UPoly(std::move(coeffs))))
    cyc.add(make_component(homogenize_binary(f.factor, nv, u, w), n, dim, f.multiplicity));
  return cyc;
}

/// Cyclic module whose Groebner basis has monomial principal symbols, so
/// gr(M) is a monomial quotient. Top components are the minimum vertex covers
/// S of the generators; the multiplicity is the number of standard monomials
/// in the variables of S once the other variables are inverted.
inline std::optional<CharCycle> cycle_monomial(const GroebnerBasis<Rational>& gb, int n) {
  const std::size_t nv = static_cast<std::size_t>(2 * n);
  std::vector<Exponents> gens;
  for (const auto& g : gb.generators()) {
    auto sigma = g[0].principal_symbol();
    if (sigma.terms().size() != 1) return std::nullopt;
    gens.push_back(sigma.terms().begin()->first);
  }
  auto covers = [&](unsigned mask) {
    for (const auto& e : gens) {
      bool hit = false;
      for (std::size_t v = 0; v < nv && !hit; ++v) hit = (mask >> v & 1u) && e[v] > 0;
      if (!hit) return false;
    }
    return true;
  };
  int codim = static_cast<int>(nv) + 1;
  for (unsigned mask = 0; mask < (1u << nv); ++mask)
    if (covers(mask)) codim = std::min(codim, std::popcount(mask));
  CharCycle cyc;
  const auto names = symbol_variable_names(n);
  for (unsigned mask = 0; mask < (1u << nv); ++mask) {
    if (std::popcount(mask) != codim || !covers(mask)) continue;
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < nv; ++v)
      if (mask >> v & 1u) vars.push_back(v);
    std::vector<Exponents> local;
    std::vector<int> bound(vars.size(), 0);
    for (const auto& e : gens) {
      Exponents f(vars.size());
      for (std::size_t k = 0; k < vars.size(); ++k) f[k] = e[vars[k]];
      local.push_back(f);
      std::size_t nonzero = 0, at = 0;
      for (std::size_t k = 0; k < f.size(); ++k)
        if (f[k] > 0) ++nonzero, at = k;
      if (nonzero == 1 && (bound[at] == 0 || f[at] < bound[at])) bound[at] = f[at];
    }
    long mult = 0;
    Exponents cur(vars.size(), 0);
    for (;;) {
      bool standard = true;
      for (const auto& f : local) {
        bool divides = true;
        for (std::size_t k = 0; k < f.size() && divides; ++k) divides = f[k] <= cur[k];
        if (divides) standard = false;
      }
      if (standard) ++mult;
      std::size_t k = 0;
      while (k < cur.size() && ++cur[k] == bound[k]) cur[k++] = 0;
      if (k == cur.size()) break;
    }
    CycleComponent c;
    c.label = "(";
    for (std::size_t k = 0; k < vars.size(); ++k) {
      c.generators.push_back(CommPoly<Rational>::variable(nv, vars[k]));
      c.label += (k ? ", " : "") + names[vars[k]];
    }
    c.label += ")";
    c.dimension = static_cast<int>(nv) - codim;
    c.multiplicity = mult;
    cyc.add(std::move(c));
  }
  return cyc;
}

}  // namespace detail

/// Characteristic cycle of gr(M) for the filtration with generators in
/// degree 0. Right modules use their transposed left module.
inline CharCycle char_cycle(const PresentedModule<Rational>& m) {
  const Algebra& alg = m.algebra();
  if (alg.tag != RingTag::RationalField)
    throw Error(ErrorCode::RingMismatch, "char_cycle needs rational coefficients, got " + ring_name(alg.tag));
  auto gb = m.relation_basis();
  if (m.rank() == 0 || gb.is_everything()) throw Error(ErrorCode::ZeroModule, "char_cycle of the zero module");
  if (alg.n == 1) return detail::cycle_n1(gb, m.rank());
  if (gb.empty()) {
    CharCycle c;
    c.add(detail::zero_ideal_component(alg.n, static_cast<long>(m.rank())));
    return c;
  }
  if (m.rank() == 1 && gb.size() == 1) return detail::cycle_principal(gb.generators().front()[0], alg.n);
  if (m.rank() == 1)
    if (auto c = detail::cycle_monomial(gb, alg.n)) return *c;
  throw Error(ErrorCode::UnsupportedAmbient,
              "char_cycle for n > 1 needs a cyclic module with a principal or monomial symbol ideal");
}

}  // namespace dhat
