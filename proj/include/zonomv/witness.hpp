#pragma once

#include <vector>

#include "zonomv/linalg.hpp"
#include "zonomv/verify.hpp"
#include "zonomv/zonotope.hpp"

namespace zonomv {

/// Convex polytope given by a vertex list (the hull is implied; interior
/// points and duplicates are tolerated).
struct PolytopeV {
  std::vector<Vec3> vertices;
  friend bool operator==(const PolytopeV&, const PolytopeV&) = default;
};

/// conv(0, e1, e2, e1+e2, e3).
PolytopeV square_pyramid();

/// All 2^m subset sums of the generators; their hull is the zonotope.
PolytopeV zonotope_vertices(const Zonotope3& z);

/// Exact volume of conv(P); 0 when P is lower dimensional.
Rat volume_polytope(const PolytopeV& p);

/// V(P, [0,u], [0,v]) = 1/6 (max - min of <u x v, p> over the vertices).
Rat mv_seg_seg(const PolytopeV& p, const Vec3& u, const Vec3& v);

/// V(P, P, [0,u]) = (Vol(P + [0,u]) - Vol(P)) / 3.
Rat mv_body_body_seg(const PolytopeV& p, const Vec3& u);

/// V(A,A,A) V(B,C,A) <= 2 V(A,B,A) V(A,C,A) with B = [0,u], C = [0,v] and the
/// polytope A in the remaining slot.
IneqReport af_square_with_segments(const PolytopeV& a, const Vec3& u, const Vec3& v);

/// The sharpness instance: A = square pyramid, B = [0,e1], C = [0,e2].
IneqReport pyramid_equality_report();

}  // namespace zonomv
