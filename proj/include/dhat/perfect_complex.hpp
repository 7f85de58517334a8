#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dhat/linalg.hpp"
#include "dhat/local_scalar.hpp"

namespace dhat {

/// Bounded complex of finite free modules over Q[z] localized at z:
/// C^0 -> C^1 -> ... with d_i an r_i x r_{i+1} matrix acting on row vectors.
struct PerfectComplex {
  std::vector<std::size_t> ranks;
  std::vector<DenseMatrix<LocalScalar>> maps;
};

struct EulerReport {
  long generic_chi = 0;
  long special_chi = 0;
  long alternating_rank_sum = 0;
  std::vector<long> generic_dims;
  std::vector<long> special_dims;
  bool equal = false;
};

namespace detail {

inline std::vector<long> cohomology_dims(const std::vector<std::size_t>& ranks, const std::vector<std::size_t>& map_ranks) {
  std::vector<long> dims;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    long d = static_cast<long>(ranks[i]);
    if (i < map_ranks.size()) d -= static_cast<long>(map_ranks[i]);
    if (i > 0) d -= static_cast<long>(map_ranks[i - 1]);
    dims.push_back(d);
  }
  return dims;
}

inline long alternating(const std::vector<long>& v) {
  long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i % 2 ? -1 : 1) * v[i];
  return s;
}

}  // namespace detail

/// Compares the Euler characteristics of the generic fiber (over Q(z)) and
/// the special fiber (z = 0).
inline EulerReport euler_check_perfect(const PerfectComplex& c) {
  if (c.maps.size() + 1 != c.ranks.size() && !(c.ranks.empty() && c.maps.empty()))
    throw Error(ErrorCode::NotAComplex, "need one map between each pair of consecutive terms");
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    const auto& d = c.maps[i];
    if (d.rows() != c.ranks[i] || d.cols() != c.ranks[i + 1])
      throw Error(ErrorCode::RankMismatch, "map " + std::to_string(i) + " has the wrong shape");
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t k = 0; k < d.cols(); ++k)
        if (!d(r, k).is_integral()) throw Error(ErrorCode::NonIntegral, "entry " + d(r, k).to_string() + " has a pole at z = 0");
  }
  for (std::size_t i = 0; i + 1 < c.maps.size(); ++i)
    if (!(c.maps[i] * c.maps[i + 1]).is_zero())
      throw Error(ErrorCode::NotAComplex, "d" + std::to_string(i + 1) + " * d" + std::to_string(i) + " is not zero");

  std::vector<std::size_t> generic_ranks, special_ranks;
  for (const auto& d : c.maps) {
    generic_ranks.push_back(rank(d));
    special_ranks.push_back(rank(d.map<Rational>([](const LocalScalar& a) { return a.residue(); })));
  }
  EulerReport r;
  r.generic_dims = detail::cohomology_dims(c.ranks, generic_ranks);
  r.special_dims = detail::cohomology_dims(c.ranks, special_ranks);
  r.generic_chi = detail::alternating(r.generic_dims);
  r.special_chi = detail::alternating(r.special_dims);
  std::vector<long> rk(c.ranks.begin(), c.ranks.end());
  r.alternating_rank_sum = detail::alternating(rk);
  r.equal = r.generic_chi == r.special_chi;
  return r;
}

}  // namespace dhat
