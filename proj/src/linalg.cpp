#include "zonomv/linalg.hpp"

#include "zonomv/errors.hpp"

namespace zonomv {

Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Rat det2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) { return a * d - b * c; }

Rat det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  // expansion along the first row (x components)
  return a.x * det2(b.y, c.y, b.z, c.z) - b.x * det2(a.y, c.y, a.z, c.z) +
         c.x * det2(a.y, b.y, a.z, b.z);
}

Mat3 Mat3::identity() { return diagonal(1, 1, 1); }

Mat3 Mat3::diagonal(const Rat& a, const Rat& b, const Rat& c) {
  Mat3 m;
  m.rows[0][0] = a;
  m.rows[1][1] = b;
  m.rows[2][2] = c;
  return m;
}

Vec3 Mat3::operator*(const Vec3& v) const {
  Vec3 out;
  for (std::size_t r = 0; r < 3; ++r) {
    out[r] = rows[r][0] * v.x + rows[r][1] * v.y + rows[r][2] * v.z;
  }
  return out;
}

Rat Mat3::det() const {
  const Vec3 c0{rows[0][0], rows[1][0], rows[2][0]};
  const Vec3 c1{rows[0][1], rows[1][1], rows[2][1]};
  const Vec3 c2{rows[0][2], rows[1][2], rows[2][2]};
  return det3(c0, c1, c2);
}

Rat minor3(const Mat3xM& m, const Triple& idx) {
  if (!(idx[0] < idx[1] && idx[1] < idx[2])) {
    throw DomainError("minor3: column indices must be distinct and increasing");
  }
  if (idx[2] >= m.cols()) throw DomainError("minor3: column index out of range");
  return det3(m.columns[idx[0]], m.columns[idx[1]], m.columns[idx[2]]);
}

}  // namespace zonomv
