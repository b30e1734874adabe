#include "zonomv/hull.hpp"

#include <map>
#include <optional>
#include <utility>

namespace zonomv {

int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return det3(b - a, c - a, d - a).sign();
}

namespace {

using Face = std::array<std::size_t, 3>;

// Indices of four affinely independent points, or nothing when the set is
// contained in a plane.
std::optional<std::array<std::size_t, 4>> initial_simplex(std::span<const Vec3> p) {
  const std::size_t n = p.size();
  std::size_t i1 = n, i2 = n, i3 = n;
  for (std::size_t i = 1; i < n && i1 == n; ++i) {
    if (!(p[i] - p[0]).is_zero()) i1 = i;
  }
  if (i1 == n) return std::nullopt;
  for (std::size_t i = i1 + 1; i < n && i2 == n; ++i) {
    if (!cross(p[i1] - p[0], p[i] - p[0]).is_zero()) i2 = i;
  }
  if (i2 == n) return std::nullopt;
  for (std::size_t i = i2 + 1; i < n && i3 == n; ++i) {
    if (orient3d(p[0], p[i1], p[i2], p[i]) != 0) i3 = i;
  }
  if (i3 == n) return std::nullopt;
  return std::array<std::size_t, 4>{0, i1, i2, i3};
}

}  // namespace

ConvexHull3 convex_hull(std::span<const Vec3> points) {
  ConvexHull3 hull;
  hull.points.assign(points.begin(), points.end());
  const auto& p = hull.points;
  const auto simplex = initial_simplex(p);
  if (!simplex) return hull;

  auto [a, b, c, d] = *simplex;
  // orient so that d is on the negative (inner) side of face (a, b, c)
  if (orient3d(p[a], p[b], p[c], p[d]) > 0) std::swap(b, c);
  std::vector<Face> faces{{a, b, c}, {a, d, b}, {b, d, c}, {c, d, a}};

  for (std::size_t v = 0; v < p.size(); ++v) {
    if (v == a || v == b || v == c || v == d) continue;
    std::vector<bool> visible(faces.size(), false);
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      const auto& fc = faces[f];
      if (orient3d(p[fc[0]], p[fc[1]], p[fc[2]], p[v]) > 0) {
        visible[f] = true;
        any = true;
      }
    }
    if (!any) continue;  // inside or on the boundary

    // horizon: directed edges of visible faces whose reverse is not visible
    std::map<std::pair<std::size_t, std::size_t>, bool> edge_visible;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      for (std::size_t e = 0; e < 3; ++e) {
        edge_visible[{faces[f][e], faces[f][(e + 1) % 3]}] = visible[f];
      }
    }
    std::vector<Face> next;
    next.reserve(faces.size() + 4);
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) {
        next.push_back(faces[f]);
        continue;
      }
      for (std::size_t e = 0; e < 3; ++e) {
        const std::size_t from = faces[f][e], to = faces[f][(e + 1) % 3];
        if (!edge_visible.at({to, from})) next.push_back({from, to, v});
      }
    }
    faces = std::move(next);
  }
  hull.faces = std::move(faces);
  return hull;
}

Rat ConvexHull3::volume() const {
  if (faces.empty()) return 0;
  const Vec3& ref = points[faces.front()[0]];
  Rat six_vol;
  for (const auto& f : faces) six_vol += det3(points[f[0]] - ref, points[f[1]] - ref, points[f[2]] - ref);
  return six_vol / Rat(6);
}

}  // namespace zonomv
