#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "zonomv/linalg.hpp"

namespace zonomv {

/// Sign of det(b - a, c - a, d - a): positive when d lies on the side of
/// plane (a, b, c) that the counter-clockwise normal points to.
int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

/// Triangulated boundary of the convex hull of a rational point set.
///
/// Built by incremental insertion with exact orientation tests. Faces index
/// into `points` and are oriented counter-clockwise seen from outside.
/// Coplanar hull facets may be split into several triangles. When the points
/// span less than three dimensions `faces` is empty.
struct ConvexHull3 {
  std::vector<Vec3> points;
  std::vector<std::array<std::size_t, 3>> faces;

  bool is_full_dimensional() const { return !faces.empty(); }
  /// Exact enclosed volume (0 for a degenerate hull).
  Rat volume() const;
};

ConvexHull3 convex_hull(std::span<const Vec3> points);

}  // namespace zonomv
