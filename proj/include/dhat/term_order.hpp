#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "dhat/weyl.hpp"

namespace dhat {

/// Monomial of a free module: e_comp * x^alpha d^beta c^e.
struct ModMonomial {
  int comp = 0;
  WeylMonomial m;

  friend bool operator==(const ModMonomial&, const ModMonomial&) = default;
};

enum class OrderKind : std::uint8_t {
  DegRevLexBernstein,
  POTElimination,
  VOrderAlongX1,
};

/// Total well-order on module monomials. compare() returns the sign of a - b.
///
/// DegRevLexBernstein: Bernstein degree, then central degree (higher wins),
///   then reverse lexicographic on x1..x4, d1..d4, then component (lower index
///   wins). With pot set the component is compared first.
/// POTElimination: components below `block` beat every component at or above
///   it; inside each block DegRevLexBernstein (term over position).
/// VOrderAlongX1: weight d1 - x1 refined for the homogenized algebra by total
///   degree first and a lower power of h second; with dehomogenized set the
///   weight comes first and ties go to the higher Bernstein degree.
class TermOrder {
 public:
  TermOrder() = default;

  static TermOrder deg_rev_lex(bool pot = false) {
    TermOrder o;
    o.kind_ = OrderKind::DegRevLexBernstein;
    o.pot_ = pot;
    return o;
  }
  static TermOrder elimination(int block) {
    TermOrder o;
    o.kind_ = OrderKind::POTElimination;
    o.block_ = block;
    return o;
  }
  static TermOrder v_order(bool dehomogenized = false) {
    TermOrder o;
    o.kind_ = OrderKind::VOrderAlongX1;
    o.dehomogenized_ = dehomogenized;
    return o;
  }

  OrderKind kind() const { return kind_; }
  bool position_over_term() const { return pot_; }
  int block() const { return block_; }
  bool dehomogenized() const { return dehomogenized_; }

  std::string name() const {
    switch (kind_) {
      case OrderKind::DegRevLexBernstein: return pot_ ? "DegRevLexBernstein/POT" : "DegRevLexBernstein";
      case OrderKind::POTElimination: return "POTElimination(" + std::to_string(block_) + ")";
      case OrderKind::VOrderAlongX1: return dehomogenized_ ? "VOrderAlongX1/dehomogenized" : "VOrderAlongX1";
    }
    return "?";
  }

  int compare(const ModMonomial& a, const ModMonomial& b) const {
    switch (kind_) {
      case OrderKind::DegRevLexBernstein: {
        if (pot_ && a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        int c = degrevlex(a.m, b.m);
        if (c != 0) return c;
        return comp_tiebreak(a.comp, b.comp);
      }
      case OrderKind::POTElimination: {
        bool ua = a.comp < block_, ub = b.comp < block_;
        if (ua != ub) return ua ? 1 : -1;
        int c = degrevlex(a.m, b.m);
        if (c != 0) return c;
        return comp_tiebreak(a.comp, b.comp);
      }
      case OrderKind::VOrderAlongX1: {
        int c = dehomogenized_ ? v_dehomogenized(a.m, b.m) : v_homogenized(a.m, b.m);
        if (c != 0) return c;
        return comp_tiebreak(a.comp, b.comp);
      }
    }
    return 0;
  }

  bool greater(const ModMonomial& a, const ModMonomial& b) const { return compare(a, b) > 0; }
  bool less(const ModMonomial& a, const ModMonomial& b) const { return compare(a, b) < 0; }

  /// Weight of a monomial along x1 with x1 counting +1 and d1 counting -1.
  static int x_weight(const WeylMonomial& m) { return static_cast<int>(m.x[0]) - static_cast<int>(m.d[0]); }

 private:
  static int sign(long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
  static int comp_tiebreak(int a, int b) { return a == b ? 0 : (a < b ? 1 : -1); }

  static int revlex(const WeylMonomial& a, const WeylMonomial& b) {
    for (int i = kMaxAmbient - 1; i >= 0; --i)
      if (a.d[i] != b.d[i]) return a.d[i] < b.d[i] ? 1 : -1;
    for (int i = kMaxAmbient - 1; i >= 0; --i)
      if (a.x[i] != b.x[i]) return a.x[i] < b.x[i] ? 1 : -1;
    return 0;
  }

  static int degrevlex(const WeylMonomial& a, const WeylMonomial& b) {
    int c = sign(a.bernstein_degree() - b.bernstein_degree());
    if (c != 0) return c;
    c = sign(static_cast<long>(a.c) - b.c);
    if (c != 0) return c;
    return revlex(a, b);
  }

  static int v_homogenized(const WeylMonomial& a, const WeylMonomial& b) {
    int c = sign(a.total_degree() - b.total_degree());
    if (c != 0) return c;
    c = sign(-(x_weight(a) - x_weight(b)));
    if (c != 0) return c;
    c = sign(static_cast<long>(b.c) - a.c);
    if (c != 0) return c;
    return revlex(a, b);
  }

  static int v_dehomogenized(const WeylMonomial& a, const WeylMonomial& b) {
    int c = sign(-(x_weight(a) - x_weight(b)));
    if (c != 0) return c;
    c = sign(a.bernstein_degree() - b.bernstein_degree());
    if (c != 0) return c;
    c = sign(static_cast<long>(a.c) - b.c);
    if (c != 0) return c;
    return revlex(a, b);
  }

  OrderKind kind_ = OrderKind::DegRevLexBernstein;
  bool pot_ = false;
  bool dehomogenized_ = false;
  int block_ = 0;
};

}  // namespace dhat
