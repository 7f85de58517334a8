#pragma once

// Small builders for modules written in the input syntax.

#include <initializer_list>
#include <string>
#include <vector>

#include "dhat/convert.hpp"
#include "dhat/module.hpp"
#include "dhat/parse.hpp"

namespace fx {

using namespace dhat;

inline Algebra weyl(int n) { return Algebra{n, RingTag::RationalField}; }

inline WeylElement<Rational> el(const std::string& s, int n = 1) { return to_rational(parse_element(s, n, false)); }

inline WeylElement<Rational> elz(const std::string& s, int n = 1) { return to_polynomial_z(parse_element(s, n, true)); }

inline FreeVector<Rational> row(std::initializer_list<const char*> entries, int n = 1) {
  std::vector<WeylElement<Rational>> es;
  for (const char* e : entries) es.push_back(el(e, n));
  return FreeVector<Rational>(weyl(n), std::move(es));
}

/// Cyclic left module W_n / sum W_n * g.
inline PresentedModule<Rational> cyclic(std::initializer_list<const char*> gens, int n = 1) {
  std::vector<WeylElement<Rational>> rs;
  for (const char* g : gens) rs.push_back(el(g, n));
  return PresentedModule<Rational>::cyclic(rs, weyl(n));
}

inline PresentedModule<Rational> matrix_module(std::initializer_list<std::initializer_list<const char*>> rows, std::size_t cols,
                                               int n = 1) {
  WeylMatrix<Rational> m(weyl(n), cols);
  for (const auto& r : rows) m.rows.push_back(row(r, n));
  return PresentedModule<Rational>(std::move(m));
}

}  // namespace fx
