#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dhat/field.hpp"

namespace dhat {

using Exponents = std::vector<std::uint16_t>;

/// Sparse commutative polynomial in a fixed number of variables.
template <Field F>
class CommPoly {
 public:
  CommPoly() = default;
  explicit CommPoly(std::size_t nvars) : nvars_(nvars) {}
  CommPoly(std::size_t nvars, const F& c) : nvars_(nvars) {
    if (!c.is_zero()) terms_.emplace(Exponents(nvars, 0), c);
  }

  static CommPoly variable(std::size_t nvars, std::size_t i) {
    CommPoly p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), F::one());
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, F>& terms() const { return terms_; }

  void add_term(const Exponents& e, const F& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  F coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F::zero() : it->second;
  }

  long total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (auto v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }

  bool is_homogeneous() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (auto v : e) s += v;
      if (d >= 0 && s != d) return false;
      d = s;
    }
    return true;
  }

  CommPoly derivative(std::size_t i) const {
    CommPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents f = e;
      f[i] -= 1;
      r.add_term(f, c * F(static_cast<long>(e[i])));
    }
    return r;
  }

  CommPoly times_variable(std::size_t i, unsigned power = 1) const {
    CommPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f[i] = static_cast<std::uint16_t>(f[i] + power);
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  CommPoly scaled(const F& s) const {
    CommPoly r(nvars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
  }

  CommPoly operator-() const { return scaled(-F::one()); }
  CommPoly& operator+=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  CommPoly& operator-=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly r(std::max(a.nvars_, b.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(r.nvars_, 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] = static_cast<std::uint16_t>(e[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.terms_ == b.terms_; }

  /// Renders with the given variable names, highest exponents (lexicographic) first.
  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      out += render_term(c, mono, first);
      first = false;
    }
    return out;
  }

 private:
  static std::string render_term(const F& c, const std::string& mono, bool first);

  std::size_t nvars_ = 0;
  std::map<Exponents, F> terms_;
};

namespace detail {

inline std::string render_coeff_term(const Rational& c, const std::string& mono, bool first) {
  Rational mag = c.sign() < 0 ? -c : c;
  std::string s = first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
  if (mono.empty()) return s + mag.to_string();
  if (!mag.is_one()) s += mag.to_string() + "*";
  return s + mono;
}

inline std::string render_coeff_term(const LocalScalar& c, const std::string& mono, bool first) {
  if (c.is_constant()) return render_coeff_term(c.numerator().coeff(0), mono, first);
  std::string cs = c.to_string();
  if (cs.find_first_of(" ") != std::string::npos && cs.front() != '(') cs = "(" + cs + ")";
  std::string s = first ? "" : " + ";
  if (mono.empty()) return s + cs;
  return s + cs + "*" + mono;
}

}  // namespace detail

template <Field F>
std::string CommPoly<F>::render_term(const F& c, const std::string& mono, bool first) {
  return detail::render_coeff_term(c, mono, first);
}

}  // namespace dhat
