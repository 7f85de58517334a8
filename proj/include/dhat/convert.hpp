#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dhat/free_vector.hpp"

namespace dhat {

/// W_n(Q(z)) element whose coefficients are all rational constants, as an
/// element of W_n(Q).
inline WeylElement<Rational> to_rational(const WeylElement<LocalScalar>& u) {
  Algebra alg{u.algebra().n, RingTag::RationalField};
  std::vector<WeylElement<Rational>::Term> ts;
  for (const auto& [m, c] : u.terms()) {
    if (!c.is_constant())
      throw Error(ErrorCode::RingMismatch, "coefficient " + c.to_string() + " is not a rational number");
    ts.emplace_back(m, c.numerator().coeff(0));
  }
  return WeylElement<Rational>::from_terms(alg, std::move(ts));
}

/// Embeds W_n(Q) into W_n(Q(z)).
inline WeylElement<LocalScalar> to_local(const WeylElement<Rational>& u) {
  Algebra alg{u.algebra().n, RingTag::LocalField};
  std::vector<WeylElement<LocalScalar>::Term> ts;
  for (const auto& [m, c] : u.terms()) {
    if (m.c != 0) {
      LocalScalar zc = LocalScalar(UPoly::monomial(m.c)) * LocalScalar(c);
      WeylMonomial mm = m;
      mm.c = 0;
      ts.emplace_back(mm, zc);
    } else {
      ts.emplace_back(m, LocalScalar(c));
    }
  }
  return WeylElement<LocalScalar>::from_terms(alg, std::move(ts));
}

/// W_n(Q(z)) element with polynomial coefficients as an element of W_n(Q[z])
/// (z stored as the central exponent).
inline WeylElement<Rational> to_polynomial_z(const WeylElement<LocalScalar>& u) {
  Algebra alg{u.algebra().n, RingTag::PolynomialZ};
  std::vector<WeylElement<Rational>::Term> ts;
  for (const auto& [m, c] : u.terms()) {
    if (!c.is_polynomial())
      throw Error(ErrorCode::NonIntegral, "coefficient " + c.to_string() + " is not a polynomial in z");
    const auto& coeffs = c.numerator().coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      WeylMonomial mm = m;
      mm.c = static_cast<std::uint16_t>(k);
      ts.emplace_back(mm, coeffs[k]);
    }
  }
  return WeylElement<Rational>::from_terms(alg, std::move(ts));
}

/// Evaluates z = 0 in a W_n(Q[z]) element.
inline WeylElement<Rational> reduce_mod_z(const WeylElement<Rational>& u) {
  Algebra alg{u.algebra().n, RingTag::RationalField};
  std::vector<WeylElement<Rational>::Term> ts;
  for (const auto& [m, c] : u.terms())
    if (m.c == 0) ts.emplace_back(m, c);
  return WeylElement<Rational>::from_terms(alg, std::move(ts));
}

/// Sets h = 1 in a homogenized element; the result lives in W_n(Q).
inline WeylElement<Rational> dehomogenize(const WeylElement<Rational>& u) {
  Algebra alg{u.algebra().n, RingTag::RationalField};
  std::vector<WeylElement<Rational>::Term> ts;
  for (const auto& [m, c] : u.terms()) {
    WeylMonomial mm = m;
    mm.c = 0;
    ts.emplace_back(mm, c);
  }
  return WeylElement<Rational>::from_terms(alg, std::move(ts));
}

/// Homogenizes each term up to total degree `degree` with h (multiply by h^k).
inline WeylElement<Rational> homogenize(const WeylElement<Rational>& u, int degree) {
  Algebra alg{u.algebra().n, RingTag::Homogenized};
  std::vector<WeylElement<Rational>::Term> ts;
  for (const auto& [m, c] : u.terms()) {
    WeylMonomial mm = m;
    mm.c = static_cast<std::uint16_t>(degree - m.bernstein_degree());
    ts.emplace_back(mm, c);
  }
  return WeylElement<Rational>::from_terms(alg, std::move(ts));
}

template <Field F, Field G, class Fn>
FreeVector<G> convert_vector(const FreeVector<F>& v, const Algebra& target, Fn&& f) {
  std::vector<WeylElement<G>> out;
  out.reserve(v.rank());
  for (const auto& e : v.entries()) out.push_back(f(e));
  return FreeVector<G>(target, std::move(out));
}

template <Field F, Field G, class Fn>
WeylMatrix<G> convert_matrix(const WeylMatrix<F>& m, const Algebra& target, Fn&& f) {
  WeylMatrix<G> r(target, m.cols);
  for (const auto& row : m.rows) r.rows.push_back(convert_vector<F, G>(row, target, f));
  return r;
}

/// Transposition applied entrywise together with matrix transposition: the
/// left-module form of the dual map of a row-convention matrix.
template <Field F>
WeylMatrix<F> transpose_dual(const WeylMatrix<F>& m) {
  WeylMatrix<F> r(m.alg, m.rows.size());
  for (std::size_t j = 0; j < m.cols; ++j) {
    FreeVector<F> row(m.alg, m.rows.size());
    for (std::size_t i = 0; i < m.rows.size(); ++i) row[i] = m.rows[i][j].transpose();
    r.rows.push_back(std::move(row));
  }
  return r;
}

}  // namespace dhat
