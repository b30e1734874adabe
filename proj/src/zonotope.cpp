#include "zonomv/zonotope.hpp"

#include <array>
#include <cmath>

namespace zonomv {

namespace {

bool lex_positive(const Vec3& v) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (v[i].sign() != 0) return v[i].sign() > 0;
  }
  return false;
}

// Coefficient c with v = c * d, for v known to be parallel to d (d != 0).
Rat coefficient_along(const Vec3& v, const Vec3& d) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!d[i].is_zero()) return v[i] / d[i];
  }
  return 0;
}

using Approx3 = std::array<double, 3>;

Approx3 approx(const Vec3& v) { return {v.x.to_double(), v.y.to_double(), v.z.to_double()}; }

double det3_approx(const Approx3& a, const Approx3& b, const Approx3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
         c[0] * (a[1] * b[2] - a[2] * b[1]);
}

std::vector<Approx3> approx_all(const Zonotope3& z) {
  std::vector<Approx3> out;
  out.reserve(z.size());
  for (const auto& g : z.generators) out.push_back(approx(g));
  return out;
}

}  // namespace

Zonotope3 minkowski_sum(const Zonotope3& a, const Zonotope3& b) {
  Zonotope3 out = a;
  out.generators.insert(out.generators.end(), b.generators.begin(), b.generators.end());
  return out;
}

Zonotope3 scale(const Zonotope3& z, const Rat& s) {
  Zonotope3 out;
  out.generators.reserve(z.size());
  for (const auto& g : z.generators) out.generators.push_back(s * g);
  return out;
}

Zonotope3 canonicalize(const Zonotope3& z) {
  std::vector<Vec3> directions;
  std::vector<Rat> lengths;
  for (const auto& g : z.generators) {
    if (g.is_zero()) continue;
    bool merged = false;
    for (std::size_t k = 0; k < directions.size(); ++k) {
      if (cross(g, directions[k]).is_zero()) {
        lengths[k] += abs(coefficient_along(g, directions[k]));
        merged = true;
        break;
      }
    }
    if (!merged) {
      directions.push_back(lex_positive(g) ? g : -g);
      lengths.emplace_back(1);
    }
  }
  Zonotope3 out;
  out.generators.reserve(directions.size());
  for (std::size_t k = 0; k < directions.size(); ++k) {
    out.generators.push_back(lengths[k] * directions[k]);
  }
  return out;
}

Rat mixed_volume(const Zonotope3& a, const Zonotope3& b, const Zonotope3& c) {
  Rat sum;
  for (const auto& ai : a.generators) {
    for (const auto& bj : b.generators) {
      // det(ai, bj, ck) = <ai x bj, ck>
      const Vec3 n = cross(ai, bj);
      if (n.is_zero()) continue;
      for (const auto& ck : c.generators) sum += abs(dot(n, ck));
    }
  }
  return sum / Rat(6);
}

Rat volume(const Zonotope3& a) {
  const auto& g = a.generators;
  Rat sum;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Vec3 n = cross(g[i], g[j]);
      if (n.is_zero()) continue;
      for (std::size_t k = j + 1; k < g.size(); ++k) sum += abs(dot(n, g[k]));
    }
  }
  return sum;
}

Rat mv_zz_segment(const Zonotope3& a, const Vec3& u) {
  const auto& g = a.generators;
  Rat sum;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) sum += abs(det3(g[i], g[j], u));
  }
  return sum / Rat(3);
}

Zonotope3 apply_linear(const Zonotope3& z, const Mat3& m) {
  Zonotope3 out;
  out.generators.reserve(z.size());
  for (const auto& g : z.generators) out.generators.push_back(m * g);
  return out;
}

double mixed_volume_approx(const Zonotope3& a, const Zonotope3& b, const Zonotope3& c) {
  const auto ga = approx_all(a), gb = approx_all(b), gc = approx_all(c);
  double sum = 0.0;
  for (const auto& x : ga) {
    for (const auto& y : gb) {
      for (const auto& w : gc) sum += std::fabs(det3_approx(x, y, w));
    }
  }
  return sum / 6.0;
}

double volume_approx(const Zonotope3& a) {
  const auto g = approx_all(a);
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      for (std::size_t k = j + 1; k < g.size(); ++k) sum += std::fabs(det3_approx(g[i], g[j], g[k]));
    }
  }
  return sum;
}

}  // namespace zonomv
