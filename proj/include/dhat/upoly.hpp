#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dhat/rational.hpp"

namespace dhat {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients; otherwise the top one is nonzero.
class UPoly {
 public:
  UPoly() = default;
  UPoly(Rational c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  UPoly(long c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  UPoly(int c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(std::size_t k, Rational c = Rational(1)) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(k + 1);
    v[k] = std::move(c);
    return UPoly(std::move(v));
  }
  static UPoly var() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
  Rational leading() const { return c_.empty() ? Rational() : c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Order of vanishing at 0; -1 for the zero polynomial.
  long ord() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<long>(i);
    return -1;
  }

  Rational eval(const Rational& t) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

  UPoly monic() const {
    if (is_zero()) return {};
    Rational inv = leading().inverse();
    UPoly r = *this;
    for (auto& a : r.c_) a *= inv;
    return r;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UPoly(std::move(v));
  }

  /// Multiplication by t^k.
  UPoly shift(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Rational> v(k, Rational());
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(std::move(v));
  }

  /// Exact division by t^k; requires ord() >= k.
  UPoly unshift(std::size_t k) const {
    if (is_zero()) return {};
    return UPoly(std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()));
  }

  /// p(t) -> p(t + a)
  UPoly translate(const Rational& a) const {
    UPoly r;
    UPoly lin(std::vector<Rational>{a, Rational(1)});
    for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + UPoly(c_[i]);
    return r;
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  /// Euclidean division; returns (quotient, remainder).
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
    Rational inv = b.leading().inverse();
    for (std::size_t k = quo.size(); k-- > 0;) {
      const Rational& top = rem[k + b.c_.size() - 1];
      if (top.is_zero()) continue;
      Rational f = top * inv;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
      quo[k] = std::move(f);
    }
    rem.resize(b.c_.size() - 1);
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }

  /// Monic greatest common divisor; gcd(0, 0) = 0.
  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  static UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorCode::DivisionByZero, "inexact polynomial division");
    return q;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Total order used only for canonical sorting: by degree, then coefficients
  /// from the top down.
  friend bool canonical_less(const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c_.size(); i-- > 0;)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  /// Highest-degree-first rendering such as "3*z^2 - z + 1/2".
  std::string to_string(std::string_view var = "z") const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Rational& a = c_[i];
      if (a.is_zero()) continue;
      Rational mag = a.sign() < 0 ? -a : a;
      if (first) {
        if (a.sign() < 0) out += "-";
      } else {
        out += a.sign() < 0 ? " - " : " + ";
      }
      first = false;
      if (i == 0) {
        out += mag.to_string();
        continue;
      }
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace dhat
