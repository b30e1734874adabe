#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "zonomv/linalg.hpp"
#include "zonomv/verify.hpp"

namespace zonomv {

/// Plücker coordinates of a 3 x n matrix: one maximal minor per 3-subset of
/// columns, keyed by the sorted (0-based) index triple. Iteration order is
/// lexicographic.
struct PlueckerVector {
  std::size_t n = 0;
  std::map<Triple, Rat> coords;

  /// Coordinate for an arbitrary ordering of three indices, with the sign
  /// of the sorting permutation applied (zero on a repeated index).
  Rat signed_at(std::size_t i, std::size_t j, std::size_t k) const;
  const Rat& at(std::size_t i, std::size_t j, std::size_t k) const { return coords.at({i, j, k}); }

  friend bool operator==(const PlueckerVector&, const PlueckerVector&) = default;
};

/// Throws DomainError when the matrix has fewer than 3 columns.
PlueckerVector pluecker(const Mat3xM& m);

PlueckerVector abs_map(const PlueckerVector& p);

/// One three-term relation q_{sab} q_{scd} - q_{sac} q_{sbd} + q_{sad} q_{sbc}.
struct GpResidual {
  std::size_t s = 0;
  std::array<std::size_t, 4> abcd{};
  Rat value;
};

/// Residuals of every three-term Grassmann-Plücker relation: one per index s
/// and per 4-subset a<b<c<d not containing s. Empty for n < 5.
std::vector<GpResidual> check_gp3(const PlueckerVector& p);

/// (sum_{I ⊆ [m], |I|=3} q_I)(sum_i q_{i,m+1,m+2})
///   <= (sum_{S ⊆ [m], |S|=2} q_{S+{m+1}})(sum_{T ⊆ [m], |T|=2} q_{T+{m+2}})
/// on a nonnegative coordinate vector with n = m + 2 >= 5. Throws DomainError
/// on a negative coordinate or an n mismatch.
IneqReport check_quad_ineq(const PlueckerVector& q, std::size_t m);

/// The matrix (a_1, ..., a_m, e1, e2) whose Plücker image restates the
/// matrix-minor inequality.
Mat3xM append_e1_e2(std::span<const Vec3> vectors);

}  // namespace zonomv
