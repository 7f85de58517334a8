#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dhat/upoly.hpp"

namespace dhat {

struct PolyFactor {
  UPoly factor;  // monic irreducible over Q
  int multiplicity = 1;
};

namespace detail {

/// Integer coefficients of a nonzero polynomial scaled to be primitive with
/// positive leading coefficient.
inline std::vector<Integer> primitive_integer(const UPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.denominator());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.numerator() * (l / c.denominator());
    g = gcd(g, v);
    out.push_back(v);
  }
  if (g != 0)
    for (auto& v : out) v /= g;
  if (out.back() < 0)
    for (auto& v : out) v = -v;
  return out;
}

inline std::vector<Integer> positive_divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d * d != v) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  UPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UPoly basis(1);
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UPoly(std::vector<Rational>{-xs[j], Rational(1)});
      denom = denom * (xs[i] - xs[j]);
    }
    acc = acc + basis * UPoly(ys[i] / denom);
  }
  return acc;
}

/// Kronecker's method: a nontrivial factor of degree e, if one exists.
inline std::optional<UPoly> kronecker_factor(const UPoly& p, long e) {
  std::vector<Rational> xs;
  std::vector<std::vector<Integer>> choices;
  std::size_t combos = 1;
  for (long t = 0; static_cast<long>(xs.size()) <= e; t = (t <= 0 ? 1 - t : -t)) {
    Rational v = p.eval(Rational(t));
    if (v.is_zero()) continue;
    xs.push_back(Rational(t));
    auto divs = positive_divisors(v.numerator());
    std::vector<Integer> signed_divs;
    for (const auto& d : divs) {
      signed_divs.push_back(d);
      signed_divs.push_back(-d);
    }
    combos *= signed_divs.size();
    if (combos > 4'000'000)
      throw Error(ErrorCode::ConstructionFailed, "polynomial factorization search too large");
    choices.push_back(std::move(signed_divs));
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  for (;;) {
    std::vector<Rational> ys;
    for (std::size_t i = 0; i < idx.size(); ++i) ys.push_back(Rational(choices[i][idx[i]]));
    UPoly g = interpolate(xs, ys);
    if (g.degree() == e) {
      bool integral = std::all_of(g.coeffs().begin(), g.coeffs().end(), [](const Rational& c) { return c.is_integer(); });
      if (integral && UPoly::divmod(p, g).second.is_zero()) return g.monic();
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return std::nullopt;
}

}  // namespace detail

/// Yun's squarefree decomposition of a nonzero polynomial over Q.
inline std::vector<PolyFactor> squarefree_decomposition(const UPoly& f) {
  std::vector<PolyFactor> out;
  if (f.degree() <= 0) return out;
  UPoly a = f.monic();
  UPoly b = a.derivative();
  UPoly c = UPoly::gcd(a, b);
  UPoly w = UPoly::exact_div(a, c);
  UPoly y = UPoly::exact_div(b, c);
  UPoly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    UPoly g = UPoly::gcd(w, z);
    if (g.degree() > 0) out.push_back({g.monic(), i});
    w = UPoly::exact_div(w, g);
    y = UPoly::exact_div(z, g);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

/// Rational roots of a nonzero polynomial, increasing, without multiplicity.
inline std::vector<Rational> rational_roots(const UPoly& f) {
  std::vector<Rational> roots;
  if (f.degree() <= 0) return roots;
  UPoly p = f;
  if (p.ord() > 0) {
    roots.push_back(Rational(0));
    p = p.unshift(static_cast<std::size_t>(p.ord()));
  }
  if (p.degree() > 0) {
    auto ints = detail::primitive_integer(p);
    auto num = detail::positive_divisors(ints.front());
    auto den = detail::positive_divisors(ints.back());
    for (const auto& a : num)
      for (const auto& b : den)
        for (int s : {1, -1}) {
          Rational r(Integer(a * s), b);
          if (p.eval(r).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Integer roots, increasing.
inline std::vector<Integer> integer_roots(const UPoly& f) {
  std::vector<Integer> out;
  for (const auto& r : rational_roots(f))
    if (r.is_integer()) out.push_back(r.numerator());
  return out;
}

/// Monic irreducible factors of a squarefree polynomial.
inline std::vector<UPoly> factor_squarefree(UPoly p) {
  std::vector<UPoly> out;
  p = p.monic();
  for (const auto& r : rational_roots(p)) {
    UPoly lin(std::vector<Rational>{-r, Rational(1)});
    out.push_back(lin);
    p = UPoly::exact_div(p, lin);
  }
  std::vector<UPoly> work{p};
  while (!work.empty()) {
    UPoly q = work.back();
    work.pop_back();
    if (q.degree() <= 0) continue;
    if (q.degree() <= 3) {
      out.push_back(q.monic());
      continue;
    }
    std::optional<UPoly> g;
    for (long e = 2; e <= q.degree() / 2 && !g; ++e) {
      auto ints = detail::primitive_integer(q);
      std::vector<Rational> rc(ints.begin(), ints.end());
      g = detail::kronecker_factor(UPoly(rc), e);
    }
    if (!g) {
      out.push_back(q.monic());
      continue;
    }
    work.push_back(*g);
    work.push_back(UPoly::exact_div(q, *g).monic());
  }
  std::sort(out.begin(), out.end(), [](const UPoly& a, const UPoly& b) { return canonical_less(a, b); });
  return out;
}

/// Complete factorization over Q into monic irreducibles with multiplicities.
inline std::vector<PolyFactor> factor_rational(const UPoly& f) {
  std::vector<PolyFactor> out;
  for (const auto& sq : squarefree_decomposition(f))
    for (auto& g : factor_squarefree(sq.factor)) out.push_back({std::move(g), sq.multiplicity});
  std::sort(out.begin(), out.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return canonical_less(a.factor, b.factor); });
  return out;
}

}  // namespace dhat
