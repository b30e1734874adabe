#pragma once

#include <vector>

#include "zonomv/linalg.hpp"

namespace zonomv {

/// A zonotope in R^3 given by its generators: Z = [0,a_1] + ... + [0,a_m].
///
/// Only the generator list is stored. Mixed volumes are translation
/// invariant, so the base point of the Minkowski sum carries no information
/// and has no representation here. Zero generators are legal (they are
/// points) and are dropped by canonicalize().
struct Zonotope3 {
  std::vector<Vec3> generators;

  std::size_t size() const { return generators.size(); }
  friend bool operator==(const Zonotope3&, const Zonotope3&) = default;

  /// The segment [0,u].
  static Zonotope3 segment(const Vec3& u) { return Zonotope3{{u}}; }
};

/// Generator-list concatenation, i.e. the Minkowski sum of the two bodies.
Zonotope3 minkowski_sum(const Zonotope3& a, const Zonotope3& b);

/// Every generator multiplied by s (s >= 0 gives the dilate sZ).
Zonotope3 scale(const Zonotope3& z, const Rat& s);

/// Removes zero generators and merges pairwise-parallel ones.
///
/// Each parallel class is replaced by (sum |c_i|) * d where d is the first
/// member of the class flipped to be lexicographically positive and a_i = c_i d.
/// Classes keep the order of their first appearance.
Zonotope3 canonicalize(const Zonotope3& z);

/// V(A,B,C) = 1/6 * sum over all generator triples of |det(a_i, b_j, c_k)|.
Rat mixed_volume(const Zonotope3& a, const Zonotope3& b, const Zonotope3& c);

/// Vol(A) = sum_{i<j<k} |det(a_i, a_j, a_k)|, equal to mixed_volume(A,A,A).
Rat volume(const Zonotope3& a);

/// V(A,A,[0,u]) = 1/3 * sum_{i<j} |det(a_i, a_j, u)|.
Rat mv_zz_segment(const Zonotope3& a, const Vec3& u);

/// Image of Z under the linear map M (generator-wise).
Zonotope3 apply_linear(const Zonotope3& z, const Mat3& m);

/// Floating-point variants, for throughput sampling only. Never used by any
/// verification path.
double mixed_volume_approx(const Zonotope3& a, const Zonotope3& b, const Zonotope3& c);
double volume_approx(const Zonotope3& a);

}  // namespace zonomv
