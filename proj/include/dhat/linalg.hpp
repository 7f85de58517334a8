#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dhat/field.hpp"

namespace dhat {

/// Dense row-major matrix over a field.
template <Field F>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F::zero()) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.cols_ != y.rows_) throw Error(ErrorCode::RankMismatch, "dense product shape");
    DenseMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const F& v = x(i, k);
        if (v.is_zero()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += v * y(k, j);
      }
    return r;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  template <Field G, class Fn>
  DenseMatrix<G> map(Fn&& f) const {
    DenseMatrix<G> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> a_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <Field F>
std::vector<std::size_t> row_reduce(DenseMatrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <Field F>
std::size_t rank(DenseMatrix<F> m) {
  return row_reduce(m).size();
}

template <Field F>
F determinant(DenseMatrix<F> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::RankMismatch, "determinant of a non-square matrix");
  F det = F::one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return F::zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    F inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      F f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

/// Basis of {v : v * m = 0} (left kernel, row vectors).
template <Field F>
std::vector<std::vector<F>> left_kernel(const DenseMatrix<F>& m) {
  // Row-reduce [m | I]; rows whose m-part vanishes give the kernel.
  DenseMatrix<F> aug(m.rows(), m.cols() + m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols() + i) = F::one();
  }
  row_reduce(aug);
  std::vector<std::vector<F>> out;
  for (std::size_t i = 0; i < aug.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < m.cols() && zero; ++j) zero = aug(i, j).is_zero();
    if (!zero) continue;
    std::vector<F> v(m.rows());
    for (std::size_t j = 0; j < m.rows(); ++j) v[j] = aug(i, m.cols() + j);
    out.push_back(std::move(v));
  }
  return out;
}

/// Minimal polynomial of a square rational matrix, monic.
inline UPoly minimal_polynomial(const DenseMatrix<Rational>& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error(ErrorCode::RankMismatch, "minimal polynomial of a non-square matrix");
  if (n == 0) return UPoly(1);
  // Columns: vec(I), vec(A), vec(A^2), ... until a dependency appears.
  std::vector<DenseMatrix<Rational>> powers{DenseMatrix<Rational>::identity(n)};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * a);
    DenseMatrix<Rational> sys(n * n, k + 1);
    for (std::size_t p = 0; p <= k; ++p)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sys(i * n + j, p) = powers[p](i, j);
    DenseMatrix<Rational> red = sys;
    auto piv = row_reduce(red);
    if (piv.size() == k + 1) continue;
    // Solve A^k = -sum_{p<k} c_p A^p: the pivots are 0..k-1.
    std::vector<Rational> c(k + 1);
    c[k] = Rational(1);
    for (std::size_t r = 0; r < piv.size(); ++r) c[piv[r]] = -red(r, k);
    return UPoly(std::move(c));
  }
  throw Error(ErrorCode::ConstructionFailed, "minimal polynomial search exceeded the dimension");
}

}  // namespace dhat
