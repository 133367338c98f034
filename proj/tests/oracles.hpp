#pragma once

// Independent reference computations used to derive frozen expected values.
// Nothing here calls into the library's algorithms beyond basic arithmetic.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "equiareal/algebra/rational.hpp"

namespace oracle {

using equiareal::algebra::Integer;

/// Laplace expansion along the first row.
inline Integer cofactor_det(const std::vector<std::vector<Integer>>& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Integer>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(m[i][j]);
      }
      minor.push_back(row);
    }
    Integer term = m[0][col] * cofactor_det(minor);
    total += (col % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

/// Integer square root by bisection on exact integers.
inline Integer bisect_isqrt(const Integer& n) {
  Integer lo = 0, hi = n + 1;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (mid * mid <= n) lo = mid; else hi = mid;
  }
  return lo;
}

/// Plain trial division; only for inputs whose cofactors stay small.
inline std::vector<std::pair<Integer, unsigned>> trial_factor(Integer n) {
  std::vector<std::pair<Integer, unsigned>> out;
  if (n < 0) n = -n;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Checks that -R lies on the chord through P and Q (or on the tangent at P
/// when P == Q), which characterizes R = P + Q for affine inputs.
template <class K>
bool chord_rule(const K& a4, const K& px, const K& py, const K& qx, const K& qy, const K& rx, const K& ry) {
  const K nry = -ry;
  if (px == qx && py == qy) {
    return (nry - py) * (K(2) * py) == (K(3) * px * px + a4) * (rx - px);
  }
  // det [[px, py, 1], [qx, qy, 1], [rx, -ry, 1]] == 0
  return px * (qy - nry) - py * (qx - rx) + (qx * nry - qy * rx) == K(0);
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261016);
  return gen;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

}  // namespace oracle
