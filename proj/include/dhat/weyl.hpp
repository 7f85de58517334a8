#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dhat/comm_poly.hpp"
#include "dhat/field.hpp"

namespace dhat {

/// Largest supported number of variable pairs (x_i, d_i).
inline constexpr int kMaxAmbient = 4;

/// Coefficient ring of a Weyl algebra.
///  - RationalField: W_n(Q)
///  - LocalField:    W_n(Q(z)), coefficients are LocalScalar
///  - PolynomialZ:   W_n(Q[z]) with z a central commuting variable
///  - Homogenized:   the homogenized Weyl algebra, d_i x_i = x_i d_i + h^2 with h central
enum class RingTag : std::uint8_t { RationalField, LocalField, PolynomialZ, Homogenized };

inline std::string ring_name(RingTag t) {
  switch (t) {
    case RingTag::RationalField: return "QQ";
    case RingTag::LocalField: return "QZ-generic";
    case RingTag::PolynomialZ: return "QZ";
    case RingTag::Homogenized: return "QQ-homogenized";
  }
  return "?";
}

struct Algebra {
  int n = 1;
  RingTag tag = RingTag::RationalField;

  bool has_central() const { return tag == RingTag::PolynomialZ || tag == RingTag::Homogenized; }
  bool is_field() const { return tag == RingTag::RationalField || tag == RingTag::LocalField; }
  friend bool operator==(const Algebra&, const Algebra&) = default;
};

/// x^alpha d^beta c^e where c is the central variable (z or h) when present.
struct WeylMonomial {
  std::array<std::uint16_t, kMaxAmbient> x{};
  std::array<std::uint16_t, kMaxAmbient> d{};
  std::uint16_t c = 0;

  friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;

  int bernstein_degree() const {
    int s = 0;
    for (int i = 0; i < kMaxAmbient; ++i) s += x[i] + d[i];
    return s;
  }
  int total_degree() const { return bernstein_degree() + c; }
  bool is_one() const { return bernstein_degree() == 0 && c == 0; }

  /// Commutative divisibility of exponent vectors.
  bool divides(const WeylMonomial& o) const {
    for (int i = 0; i < kMaxAmbient; ++i)
      if (x[i] > o.x[i] || d[i] > o.d[i]) return false;
    return c <= o.c;
  }
  /// o / *this as exponent vectors; requires divides(o).
  WeylMonomial cofactor_in(const WeylMonomial& o) const {
    WeylMonomial q;
    for (int i = 0; i < kMaxAmbient; ++i) {
      q.x[i] = static_cast<std::uint16_t>(o.x[i] - x[i]);
      q.d[i] = static_cast<std::uint16_t>(o.d[i] - d[i]);
    }
    q.c = static_cast<std::uint16_t>(o.c - c);
    return q;
  }
  static WeylMonomial lcm(const WeylMonomial& a, const WeylMonomial& b) {
    WeylMonomial l;
    for (int i = 0; i < kMaxAmbient; ++i) {
      l.x[i] = std::max(a.x[i], b.x[i]);
      l.d[i] = std::max(a.d[i], b.d[i]);
    }
    l.c = std::max(a.c, b.c);
    return l;
  }
  /// Commutative product of exponent vectors.
  static WeylMonomial mul(const WeylMonomial& a, const WeylMonomial& b) {
    WeylMonomial m;
    for (int i = 0; i < kMaxAmbient; ++i) {
      m.x[i] = static_cast<std::uint16_t>(a.x[i] + b.x[i]);
      m.d[i] = static_cast<std::uint16_t>(a.d[i] + b.d[i]);
    }
    m.c = static_cast<std::uint16_t>(a.c + b.c);
    return m;
  }

  static WeylMonomial x_var(int i, int k = 1) {
    WeylMonomial m;
    m.x[i] = static_cast<std::uint16_t>(k);
    return m;
  }
  static WeylMonomial d_var(int i, int k = 1) {
    WeylMonomial m;
    m.d[i] = static_cast<std::uint16_t>(k);
    return m;
  }
  static WeylMonomial central(int k = 1) {
    WeylMonomial m;
    m.c = static_cast<std::uint16_t>(k);
    return m;
  }

  std::string to_string(int n, RingTag tag) const {
    std::string s;
    auto put = [&s](const std::string& name, int e) {
      if (e == 0) return;
      if (!s.empty()) s += "*";
      s += name;
      if (e > 1) s += "^" + std::to_string(e);
    };
    put(tag == RingTag::Homogenized ? "h" : "z", c);
    for (int i = 0; i < n; ++i) put("x" + std::to_string(i + 1), x[i]);
    for (int i = 0; i < n; ++i) put("d" + std::to_string(i + 1), d[i]);
    return s;
  }
};

template <Field F>
F from_integer(const Integer& k) {
  return F(Rational(k));
}

namespace detail {

/// Coefficients t(v) = C(b, v) C(a, v) v! of d^b x^a = sum_v t(v) x^(a-v) d^(b-v), one variable.
inline std::vector<Integer> reorder_coefficients(unsigned b, unsigned a) {
  unsigned top = std::min(a, b);
  std::vector<Integer> t(top + 1);
  for (unsigned v = 0; v <= top; ++v) t[v] = binomial(b, v) * binomial(a, v) * factorial(v);
  return t;
}

}  // namespace detail

/// Calls sink(monomial, integer coefficient) for every term of the normal
/// ordered product of two monomials.
template <class Sink>
void multiply_monomials(const Algebra& alg, const WeylMonomial& a, const WeylMonomial& b, Sink&& sink) {
  const int n = alg.n;
  std::array<std::vector<Integer>, kMaxAmbient> tables;
  bool trivial = true;
  for (int i = 0; i < n; ++i) {
    if (a.d[i] != 0 && b.x[i] != 0) trivial = false;
  }
  WeylMonomial base = WeylMonomial::mul(a, b);
  if (trivial) {
    sink(base, Integer(1));
    return;
  }
  for (int i = 0; i < n; ++i) tables[i] = detail::reorder_coefficients(a.d[i], b.x[i]);
  std::array<unsigned, kMaxAmbient> nu{};
  const bool homogenized = alg.tag == RingTag::Homogenized;
  while (true) {
    Integer coeff(1);
    WeylMonomial m = base;
    unsigned total = 0;
    for (int i = 0; i < n; ++i) {
      coeff *= tables[i][nu[i]];
      m.x[i] = static_cast<std::uint16_t>(m.x[i] - nu[i]);
      m.d[i] = static_cast<std::uint16_t>(m.d[i] - nu[i]);
      total += nu[i];
    }
    if (homogenized) m.c = static_cast<std::uint16_t>(m.c + 2 * total);
    sink(m, coeff);
    int i = 0;
    for (; i < n; ++i) {
      if (nu[i] + 1 < tables[i].size()) {
        ++nu[i];
        break;
      }
      nu[i] = 0;
    }
    if (i == n) break;
  }
}

/// Element of a Weyl algebra in normal order x^alpha d^beta. Terms are kept
/// sorted by monomial with no zero coefficients, so equality is syntactic.
template <Field F>
class WeylElement {
 public:
  using Term = std::pair<WeylMonomial, F>;

  WeylElement() = default;
  explicit WeylElement(Algebra alg) : alg_(alg) {}

  static WeylElement constant(Algebra alg, const F& c) {
    WeylElement e(alg);
    if (!c.is_zero()) e.terms_.emplace_back(WeylMonomial{}, c);
    return e;
  }
  static WeylElement monomial(Algebra alg, const WeylMonomial& m, const F& c = F::one()) {
    WeylElement e(alg);
    if (!c.is_zero()) e.terms_.emplace_back(m, c);
    return e;
  }
  static WeylElement x(Algebra alg, int i) { return monomial(alg, WeylMonomial::x_var(i)); }
  static WeylElement d(Algebra alg, int i) { return monomial(alg, WeylMonomial::d_var(i)); }
  static WeylElement central(Algebra alg, int k = 1) { return monomial(alg, WeylMonomial::central(k)); }

  /// Builds an element from arbitrary (possibly repeated, possibly zero) terms.
  static WeylElement from_terms(Algebra alg, std::vector<Term> terms) {
    WeylElement e(alg);
    e.terms_ = std::move(terms);
    e.normalize();
    return e;
  }

  const Algebra& algebra() const { return alg_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Nonzero element of the coefficient ring with no variables at all.
  bool is_unit_scalar() const { return terms_.size() == 1 && terms_[0].first.is_one(); }

  F coeff(const WeylMonomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const WeylMonomial& k) { return t.first < k; });
    return (it != terms_.end() && it->first == m) ? it->second : F::zero();
  }

  WeylElement operator-() const {
    WeylElement r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  WeylElement& operator+=(const WeylElement& o) {
    check_same(o);
    terms_ = merge(terms_, o.terms_, false);
    return *this;
  }
  WeylElement& operator-=(const WeylElement& o) {
    check_same(o);
    terms_ = merge(terms_, o.terms_, true);
    return *this;
  }
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) { return normal_product(a, b); }
  WeylElement& operator*=(const WeylElement& o) { return *this = normal_product(*this, o); }

  WeylElement scaled(const F& s) const {
    WeylElement r(alg_);
    if (s.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, c * s);
    return r;
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.alg_ == b.alg_ && a.terms_ == b.terms_;
  }

  /// Normal ordered product using d^b x^a = sum_v C(b,v) C(a,v) v! x^(a-v) d^(b-v).
  friend WeylElement normal_product(const WeylElement& u, const WeylElement& v) {
    u.check_same(v);
    std::vector<Term> acc;
    acc.reserve(u.terms_.size() * v.terms_.size());
    for (const auto& [mu, cu] : u.terms_) {
      for (const auto& [mv, cv] : v.terms_) {
        F c = cu * cv;
        multiply_monomials(u.alg_, mu, mv, [&](const WeylMonomial& m, const Integer& k) {
          acc.emplace_back(m, k == 1 ? c : c * from_integer<F>(k));
        });
      }
    }
    return from_terms(u.alg_, std::move(acc));
  }

  /// Maximum of |alpha| + |beta| over the terms.
  int bernstein_degree() const {
    if (is_zero()) throw Error(ErrorCode::ZeroElement, "Bernstein degree of zero");
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.bernstein_degree());
    return d;
  }

  /// Top Bernstein-degree part with d_i replaced by the commuting symbol xi_i.
  /// Variables: x_1..x_n, xi_1..xi_n, then z when the ring has a central z.
  CommPoly<F> principal_symbol() const {
    const int top = bernstein_degree();
    const std::size_t nv = symbol_vars();
    CommPoly<F> p(nv);
    for (const auto& [m, c] : terms_) {
      if (m.bernstein_degree() != top) continue;
      p.add_term(symbol_exponents(m), c);
    }
    return p;
  }

  /// The same element viewed as a commutative polynomial (x, xi[, z]).
  CommPoly<F> as_commutative() const {
    CommPoly<F> p(symbol_vars());
    for (const auto& [m, c] : terms_) p.add_term(symbol_exponents(m), c);
    return p;
  }

  std::vector<std::string> symbol_names() const {
    std::vector<std::string> names;
    for (int i = 0; i < alg_.n; ++i) names.push_back("x" + std::to_string(i + 1));
    for (int i = 0; i < alg_.n; ++i) names.push_back("xi" + std::to_string(i + 1));
    if (alg_.has_central()) names.push_back(alg_.tag == RingTag::Homogenized ? "h" : "z");
    return names;
  }

  /// Image under the automorphism x_i -> d_i, d_i -> -x_i.
  WeylElement fourier() const {
    WeylElement r(alg_);
    for (const auto& [m, c] : terms_) {
      int sign_parity = 0;
      WeylMonomial left, right;
      for (int i = 0; i < alg_.n; ++i) {
        left.d[i] = m.x[i];
        right.x[i] = m.d[i];
        sign_parity += m.d[i];
      }
      left.c = m.c;
      F coef = (sign_parity % 2 == 0) ? c : -c;
      r += monomial(alg_, left, coef) * monomial(alg_, right);
    }
    return r;
  }

  /// Image under the transposition anti-automorphism x_i -> x_i, d_i -> -d_i
  /// (products reversed). Maps right ideals to left ideals.
  WeylElement transpose() const {
    WeylElement r(alg_);
    for (const auto& [m, c] : terms_) {
      int sign_parity = 0;
      WeylMonomial left, right;
      for (int i = 0; i < alg_.n; ++i) {
        left.d[i] = m.d[i];
        right.x[i] = m.x[i];
        sign_parity += m.d[i];
      }
      left.c = m.c;
      F coef = (sign_parity % 2 == 0) ? c : -c;
      r += monomial(alg_, left, coef) * monomial(alg_, right);
    }
    return r;
  }

  /// Action on polynomials: x_i multiplies, d_i differentiates, z multiplies by
  /// the extra variable n (PolynomialZ only).
  CommPoly<F> apply_to(const CommPoly<F>& f) const {
    CommPoly<F> out(f.nvars());
    for (const auto& [m, c] : terms_) {
      CommPoly<F> g = f;
      for (int i = 0; i < alg_.n && !g.is_zero(); ++i)
        for (int k = 0; k < m.d[i]; ++k) g = g.derivative(static_cast<std::size_t>(i));
      for (int i = 0; i < alg_.n; ++i)
        if (m.x[i] != 0) g = g.times_variable(static_cast<std::size_t>(i), m.x[i]);
      if (m.c != 0) {
        if (alg_.tag != RingTag::PolynomialZ || f.nvars() <= static_cast<std::size_t>(alg_.n))
          throw Error(ErrorCode::MixedAmbient, "central variable acting on a polynomial without z");
        g = g.times_variable(static_cast<std::size_t>(alg_.n), m.c);
      }
      out += g.scaled(c);
    }
    return out;
  }

  /// Same element in another ring with the same monomials (e.g. Q -> Q[z]).
  WeylElement retagged(RingTag tag) const {
    WeylElement r = *this;
    r.alg_.tag = tag;
    return r;
  }

  /// Parser-compatible rendering, highest Bernstein degree first.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
      int da = a->first.total_degree(), db = b->first.total_degree();
      if (da != db) return da > db;
      return a->first > b->first;
    });
    std::string out;
    bool first = true;
    for (const Term* t : order) {
      out += detail::render_coeff_term(t->second, t->first.to_string(alg_.n, alg_.tag), first);
      first = false;
    }
    return out;
  }

 private:
  std::size_t symbol_vars() const {
    return static_cast<std::size_t>(2 * alg_.n + (alg_.has_central() ? 1 : 0));
  }
  Exponents symbol_exponents(const WeylMonomial& m) const {
    Exponents e(symbol_vars(), 0);
    for (int i = 0; i < alg_.n; ++i) {
      e[static_cast<std::size_t>(i)] = m.x[i];
      e[static_cast<std::size_t>(alg_.n + i)] = m.d[i];
    }
    if (alg_.has_central()) e[static_cast<std::size_t>(2 * alg_.n)] = m.c;
    return e;
  }

  void check_same(const WeylElement& o) const {
    if (!(alg_ == o.alg_))
      throw Error(ErrorCode::MixedAmbient, "operands live in different Weyl algebras (n=" +
                                               std::to_string(alg_.n) + "/" + std::to_string(o.alg_.n) + ")");
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, negate_b ? -b[j].second : b[j].second);
        ++j;
      } else {
        F c = negate_b ? a[i].second - b[j].second : a[i].second + b[j].second;
        if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Algebra alg_;
  std::vector<Term> terms_;
};

template <Field F>
WeylElement<F> fourier(const WeylElement<F>& u) {
  return u.fourier();
}

template <Field F>
CommPoly<F> apply_to_polynomial(const WeylElement<F>& u, const CommPoly<F>& f) {
  return u.apply_to(f);
}

}  // namespace dhat
