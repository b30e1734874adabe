#include "zonomv/witness.hpp"

#include "zonomv/errors.hpp"
#include "zonomv/hull.hpp"

namespace zonomv {

PolytopeV square_pyramid() {
  return PolytopeV{{Vec3{0, 0, 0}, kE1, kE2, kE1 + kE2, kE3}};
}

PolytopeV zonotope_vertices(const Zonotope3& z) {
  if (z.size() > 20) throw DomainError("zonotope_vertices: too many generators");
  PolytopeV p;
  p.vertices.push_back(Vec3{0, 0, 0});
  for (const auto& g : z.generators) {
    const std::size_t count = p.vertices.size();
    for (std::size_t i = 0; i < count; ++i) p.vertices.push_back(p.vertices[i] + g);
  }
  return p;
}

Rat volume_polytope(const PolytopeV& p) { return convex_hull(p.vertices).volume(); }

Rat mv_seg_seg(const PolytopeV& p, const Vec3& u, const Vec3& v) {
  if (p.vertices.empty()) return 0;
  const Vec3 n = cross(u, v);
  Rat lo = dot(n, p.vertices.front());
  Rat hi = lo;
  for (const auto& q : p.vertices) {
    const Rat h = dot(n, q);
    lo = min(lo, h);
    hi = max(hi, h);
  }
  return (hi - lo) / Rat(6);
}

Rat mv_body_body_seg(const PolytopeV& p, const Vec3& u) {
  std::vector<Vec3> swept;
  swept.reserve(2 * p.vertices.size());
  for (const auto& q : p.vertices) {
    swept.push_back(q);
    swept.push_back(q + u);
  }
  // Vol(P + [0,u]) = Vol(P) + 3 V(P,P,U); the V(P,U,U) and V(U,U,U) terms vanish.
  return (convex_hull(swept).volume() - volume_polytope(p)) / Rat(3);
}

IneqReport af_square_with_segments(const PolytopeV& a, const Vec3& u, const Vec3& v) {
  return check_af_square(AfSquareValues{volume_polytope(a), mv_seg_seg(a, u, v),
                                        mv_body_body_seg(a, u), mv_body_body_seg(a, v)});
}

IneqReport pyramid_equality_report() { return af_square_with_segments(square_pyramid(), kE1, kE2); }

}  // namespace zonomv
