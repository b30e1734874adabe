#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "zonomv/rational.hpp"

namespace zonomv {

struct Vec3 {
  Rat x, y, z;

  friend bool operator==(const Vec3&, const Vec3&) = default;

  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator*(const Rat& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }

  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
  const Rat& operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Rat& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline const Vec3 kE1{1, 0, 0};
inline const Vec3 kE2{0, 1, 0};
inline const Vec3 kE3{0, 0, 1};

Rat dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

/// a*d - b*c.
Rat det2(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

/// Determinant of the 3x3 matrix with columns a, b, c (cofactor expansion).
Rat det3(const Vec3& a, const Vec3& b, const Vec3& c);

/// Row-major 3x3 rational matrix.
struct Mat3 {
  std::array<std::array<Rat, 3>, 3> rows{};

  static Mat3 identity();
  static Mat3 diagonal(const Rat& a, const Rat& b, const Rat& c);

  Vec3 operator*(const Vec3& v) const;
  Rat det() const;
  friend bool operator==(const Mat3&, const Mat3&) = default;
};

/// Ordered 3-subset of column indices (0-based, strictly increasing).
using Triple = std::array<std::size_t, 3>;

/// 3 x m matrix stored as its columns; column order is significant.
struct Mat3xM {
  std::vector<Vec3> columns;

  std::size_t cols() const { return columns.size(); }
  friend bool operator==(const Mat3xM&, const Mat3xM&) = default;
};

/// det3 of the columns selected by `idx`. Throws DomainError when an index is
/// out of range or the indices are not strictly increasing.
Rat minor3(const Mat3xM& m, const Triple& idx);

}  // namespace zonomv
