#pragma once

#include <cstddef>
#include <vector>

#include "dhat/groebner.hpp"

namespace dhat {

namespace detail {

inline void require_polynomial_z(const Algebra& alg) {
  if (alg.tag != RingTag::PolynomialZ)
    throw Error(ErrorCode::RingMismatch, "z-saturation needs coefficients in Q[z], got " + ring_name(alg.tag));
}

/// Divides a vector all of whose terms carry z by z.
inline FreeVector<Rational> divide_by_z(const FreeVector<Rational>& v) {
  return map_entries(v, [](const WeylElement<Rational>& e) {
    std::vector<WeylElement<Rational>::Term> ts;
    for (auto [m, c] : e.terms()) {
      if (m.c == 0) throw Error(ErrorCode::ConstructionFailed, "vector is not divisible by z");
      --m.c;
      ts.emplace_back(m, c);
    }
    return WeylElement<Rational>::from_terms(e.algebra(), std::move(ts));
  });
}

inline std::vector<FreeVector<Rational>> z_multiples_of_units(const Algebra& alg, std::size_t rank) {
  std::vector<FreeVector<Rational>> out;
  for (std::size_t k = 0; k < rank; ++k) {
    FreeVector<Rational> v(alg, rank);
    v[k] = WeylElement<Rational>::central(alg);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

/// Generators of (N : z) = {v : z v in N}, via N intersected with z F.
inline std::vector<FreeVector<Rational>> colon_z(const Algebra& alg, std::size_t rank,
                                                 const std::vector<FreeVector<Rational>>& n) {
  detail::require_polynomial_z(alg);
  std::vector<FreeVector<Rational>> out;
  for (const auto& v : intersect(alg, rank, n, detail::z_multiples_of_units(alg, rank)))
    out.push_back(detail::divide_by_z(v));
  return out;
}

/// Generators of (N : z) computed as {c : sum_j c_j z e_j in N}; an
/// independent route used to cross-check colon_z.
inline std::vector<FreeVector<Rational>> colon_z_by_modulo(const Algebra& alg, std::size_t rank,
                                                           const std::vector<FreeVector<Rational>>& n) {
  detail::require_polynomial_z(alg);
  return modulo(alg, rank, detail::z_multiples_of_units(alg, rank), n);
}

/// Generators (a reduced Groebner basis) of the saturation (N : z^infinity).
inline std::vector<FreeVector<Rational>> saturate_z(const Algebra& alg, std::size_t rank,
                                                    const std::vector<FreeVector<Rational>>& n) {
  detail::require_polynomial_z(alg);
  auto gb = buchberger(alg, rank, n);
  for (;;) {
    auto current = gb.generators();
    auto colon = colon_z(alg, rank, current);
    if (gb.contains_all(colon)) return current;
    gb = buchberger(alg, rank, colon);
  }
}

}  // namespace dhat
