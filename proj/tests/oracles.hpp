#pragma once

// Test-only reference computations. They deliberately avoid the library's
// determinant and mixed-volume code paths so they can serve as independent
// oracles.

#include <array>
#include <cstddef>
#include <vector>

#include "zonomv/linalg.hpp"
#include "zonomv/zonotope.hpp"

namespace oracle {

using zonomv::Rat;
using zonomv::Vec3;

/// Leibniz formula: sum over the six permutations with their signs.
inline Rat leibniz_det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  const std::array<const Vec3*, 3> col{&a, &b, &c};
  static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  static constexpr int signs[6] = {1, 1, 1, -1, -1, -1};
  Rat sum;
  for (int p = 0; p < 6; ++p) {
    // row r of column perms[p][r]
    Rat term = signs[p];
    for (std::size_t r = 0; r < 3; ++r) term *= (*col[static_cast<std::size_t>(perms[p][r])])[r];
    sum += term;
  }
  return sum;
}

inline Rat abs_value(const Rat& q) { return q.sign() < 0 ? -q : q; }

/// Sum over unordered triples of |det|.
inline Rat zonotope_volume(const std::vector<Vec3>& g) {
  Rat sum;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      for (std::size_t k = j + 1; k < g.size(); ++k) sum += abs_value(leibniz_det3(g[i], g[j], g[k]));
  return sum;
}

inline std::vector<Vec3> concat(std::vector<Vec3> a, const std::vector<Vec3>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Mixed volume by polarization of the volume polynomial:
/// 6 V(A,B,C) = Vol(A+B+C) - Vol(A+B) - Vol(A+C) - Vol(B+C) + Vol(A) + Vol(B) + Vol(C).
inline Rat mixed_volume(const zonomv::Zonotope3& a, const zonomv::Zonotope3& b, const zonomv::Zonotope3& c) {
  const auto& ga = a.generators;
  const auto& gb = b.generators;
  const auto& gc = c.generators;
  const Rat six = zonotope_volume(concat(concat(ga, gb), gc)) - zonotope_volume(concat(ga, gb)) -
                  zonotope_volume(concat(ga, gc)) - zonotope_volume(concat(gb, gc)) + zonotope_volume(ga) +
                  zonotope_volume(gb) + zonotope_volume(gc);
  return six / Rat(6);
}

}  // namespace oracle
