#pragma once

#include <climits>
#include <string>
#include <utility>

#include "dhat/upoly.hpp"

namespace dhat {

/// Valuation of the zero element.
inline constexpr long kInfiniteValuation = LONG_MAX;

/// Element of Q(z) carrying the z-adic valuation. Integral elements form the
/// local ring Q[z]_(z), the exact stand-in for the valuation ring, and z plays
/// the uniformizer.
///
/// Canonical form: numerator and denominator coprime, denominator monic, zero
/// stored as 0/1. Equal rational functions have identical representations.
class LocalScalar {
 public:
  LocalScalar() : den_(1) {}
  LocalScalar(Rational c) : num_(std::move(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  LocalScalar(long c) : LocalScalar(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LocalScalar(int c) : LocalScalar(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit LocalScalar(UPoly p) : num_(std::move(p)), den_(1) {}
  LocalScalar(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

  static LocalScalar zero() { return {}; }
  static LocalScalar one() { return LocalScalar(1); }
  static LocalScalar z() { return LocalScalar(UPoly::var()); }

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }

  /// ord_z(numerator) - ord_z(denominator), or kInfiniteValuation for 0.
  long valuation() const {
    if (is_zero()) return kInfiniteValuation;
    return num_.ord() - den_.ord();
  }

  bool is_integral() const { return valuation() >= 0; }

  /// Image in the residue field Q under z -> 0.
  Rational residue() const {
    if (!is_integral())
      throw Error(ErrorCode::NonIntegral, "residue of " + to_string() + " (valuation " +
                                              std::to_string(valuation()) + ")");
    if (is_zero()) return {};
    return num_.coeff(0) / den_.coeff(0);
  }

  LocalScalar inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(z)");
    return LocalScalar(den_, num_);
  }

  LocalScalar operator-() const {
    LocalScalar r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend LocalScalar operator+(const LocalScalar& a, const LocalScalar& b) {
    if (a.den_ == b.den_) return LocalScalar(a.num_ + b.num_, a.den_);
    return LocalScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LocalScalar operator-(const LocalScalar& a, const LocalScalar& b) { return a + (-b); }
  friend LocalScalar operator*(const LocalScalar& a, const LocalScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) {
      LocalScalar r;
      r.num_ = a.num_ * b.num_;
      r.den_ = UPoly(1);
      return r;
    }
    return LocalScalar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend LocalScalar operator/(const LocalScalar& a, const LocalScalar& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in Q(z)");
    return LocalScalar(a.num_ * b.den_, a.den_ * b.num_);
  }
  LocalScalar& operator+=(const LocalScalar& o) { return *this = *this + o; }
  LocalScalar& operator-=(const LocalScalar& o) { return *this = *this - o; }
  LocalScalar& operator*=(const LocalScalar& o) { return *this = *this * o; }
  LocalScalar& operator/=(const LocalScalar& o) { return *this = *this / o; }

  friend bool operator==(const LocalScalar& a, const LocalScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "(num)/(den)" with parentheses dropped where unambiguous.
  std::string to_string() const {
    if (den_.degree() == 0) return num_.to_string();
    auto wrap = [](const UPoly& p) {
      std::string s = p.to_string();
      bool atom = s.find_first_of(" */") == std::string::npos;
      return atom ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const LocalScalar& a) { return os << a.to_string(); }

 private:
  void canonicalize() {
    if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = UPoly(1);
      return;
    }
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = UPoly::exact_div(num_, g);
      den_ = UPoly::exact_div(den_, g);
    }
    Rational lc = den_.leading();
    if (!lc.is_one()) {
      Rational inv = lc.inverse();
      num_ = num_ * UPoly(inv);
      den_ = den_ * UPoly(inv);
    }
  }

  UPoly num_;
  UPoly den_;
};

inline Rational reduce_residue(const LocalScalar& a) { return a.residue(); }

}  // namespace dhat
