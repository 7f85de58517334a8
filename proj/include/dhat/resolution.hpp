#pragma once

#include <cstddef>
#include <vector>

#include "dhat/groebner.hpp"

namespace dhat {

/// F_0 <- F_1 <- ... with maps[k] the matrix of d_{k+1}: F_{k+1} -> F_k in
/// row convention (ranks[k+1] rows, ranks[k] columns).
template <Field F>
struct FreeResolution {
  Algebra alg;
  std::vector<std::size_t> ranks;
  std::vector<WeylMatrix<F>> maps;

  std::size_t length() const { return maps.size(); }
  /// True when the last syzygy module was found to be zero.
  bool complete = false;
};

/// Resolution of the cokernel of a presentation by iterated syzygies,
/// computing at most max_length maps.
template <Field F>
FreeResolution<F> free_resolution(const WeylMatrix<F>& presentation, std::size_t max_length) {
  FreeResolution<F> res;
  res.alg = presentation.alg;
  res.ranks.push_back(presentation.cols);
  WeylMatrix<F> d = presentation.compressed();
  while (res.maps.size() < max_length) {
    if (d.rows.empty()) {
      res.complete = true;
      return res;
    }
    res.ranks.push_back(d.rows.size());
    const std::size_t cols = d.rows.size();
    auto syz = syzygies(res.alg, d.cols, d.rows);
    res.maps.push_back(std::move(d));
    d = WeylMatrix<F>(res.alg, cols, std::move(syz)).compressed();
  }
  res.complete = d.rows.empty();
  return res;
}

/// Checks that consecutive maps compose to zero.
template <Field F>
bool composes_to_zero(const FreeResolution<F>& r) {
  for (std::size_t k = 0; k + 1 < r.maps.size(); ++k)
    if (!(r.maps[k + 1] * r.maps[k]).is_zero()) return false;
  return true;
}

}  // namespace dhat
