#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dhat/weyl.hpp"

namespace dhat {

/// Row vector in the free left module W^rank.
template <Field F>
class FreeVector {
 public:
  FreeVector() = default;
  FreeVector(Algebra alg, std::size_t rank) : alg_(alg), entries_(rank, WeylElement<F>(alg)) {}
  FreeVector(Algebra alg, std::vector<WeylElement<F>> entries) : alg_(alg), entries_(std::move(entries)) {
    for (const auto& e : entries_)
      if (!(e.algebra() == alg_)) throw Error(ErrorCode::MixedAmbient, "vector entry from another algebra");
  }

  static FreeVector unit(Algebra alg, std::size_t rank, std::size_t k) {
    FreeVector v(alg, rank);
    v.entries_[k] = WeylElement<F>::constant(alg, F::one());
    return v;
  }

  const Algebra& algebra() const { return alg_; }
  std::size_t rank() const { return entries_.size(); }
  const WeylElement<F>& operator[](std::size_t i) const { return entries_[i]; }
  WeylElement<F>& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<WeylElement<F>>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  FreeVector& operator+=(const FreeVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  FreeVector& operator-=(const FreeVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  friend FreeVector operator+(FreeVector a, const FreeVector& b) { return a += b; }
  friend FreeVector operator-(FreeVector a, const FreeVector& b) { return a -= b; }

  /// Left multiplication u * v.
  friend FreeVector operator*(const WeylElement<F>& u, const FreeVector& v) {
    FreeVector r(v.alg_, v.rank());
    for (std::size_t i = 0; i < v.rank(); ++i) r.entries_[i] = u * v.entries_[i];
    return r;
  }

  friend bool operator==(const FreeVector& a, const FreeVector& b) { return a.entries_ == b.entries_; }

  /// Concatenation (v, w) in W^(rank v + rank w).
  static FreeVector concat(const FreeVector& v, const FreeVector& w) {
    FreeVector r = v;
    r.entries_.insert(r.entries_.end(), w.entries_.begin(), w.entries_.end());
    return r;
  }
  FreeVector slice(std::size_t from, std::size_t to) const {
    return FreeVector(alg_, std::vector<WeylElement<F>>(entries_.begin() + static_cast<long>(from),
                                                        entries_.begin() + static_cast<long>(to)));
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ", ";
      s += entries_[i].to_string();
    }
    return s + "]";
  }

 private:
  void check_rank(const FreeVector& o) const {
    if (o.rank() != rank())
      throw Error(ErrorCode::RankMismatch,
                  "vectors of rank " + std::to_string(rank()) + " and " + std::to_string(o.rank()));
  }

  Algebra alg_;
  std::vector<WeylElement<F>> entries_;
};

/// Matrix over a Weyl algebra as a list of rows of a common rank.
template <Field F>
struct WeylMatrix {
  Algebra alg;
  std::size_t cols = 0;
  std::vector<FreeVector<F>> rows;

  WeylMatrix() = default;
  WeylMatrix(Algebra a, std::size_t c) : alg(a), cols(c) {}
  WeylMatrix(Algebra a, std::size_t c, std::vector<FreeVector<F>> r) : alg(a), cols(c), rows(std::move(r)) {
    for (const auto& row : rows)
      if (row.rank() != cols) throw Error(ErrorCode::RankMismatch, "ragged matrix");
  }

  std::size_t row_count() const { return rows.size(); }
  const WeylElement<F>& at(std::size_t i, std::size_t j) const { return rows[i][j]; }

  bool is_zero() const {
    for (const auto& r : rows)
      if (!r.is_zero()) return false;
    return true;
  }

  /// Drops zero rows.
  WeylMatrix compressed() const {
    WeylMatrix m(alg, cols);
    for (const auto& r : rows)
      if (!r.is_zero()) m.rows.push_back(r);
    return m;
  }

  /// Product with row-vector convention: (rows x cols) * (cols x k).
  friend WeylMatrix operator*(const WeylMatrix& a, const WeylMatrix& b) {
    if (a.cols != b.rows.size()) throw Error(ErrorCode::RankMismatch, "matrix product shape");
    WeylMatrix r(a.alg, b.cols);
    for (const auto& row : a.rows) {
      FreeVector<F> acc(a.alg, b.cols);
      for (std::size_t k = 0; k < a.cols; ++k)
        if (!row[k].is_zero()) acc += row[k] * b.rows[k];
      r.rows.push_back(std::move(acc));
    }
    return r;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) s += ", ";
      s += rows[i].to_string();
    }
    return s + "]";
  }
};

/// Applies f to every entry.
template <Field F, class Fn>
FreeVector<F> map_entries(const FreeVector<F>& v, Fn&& f) {
  std::vector<WeylElement<F>> out;
  out.reserve(v.rank());
  for (const auto& e : v.entries()) out.push_back(f(e));
  Algebra alg = out.empty() ? v.algebra() : out.front().algebra();
  return FreeVector<F>(alg, std::move(out));
}

}  // namespace dhat
