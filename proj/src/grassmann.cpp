#include "zonomv/grassmann.hpp"

#include <algorithm>

#include "zonomv/errors.hpp"

namespace zonomv {

Rat PlueckerVector::signed_at(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j || j == k || i == k) return 0;
  std::array<std::size_t, 3> idx{i, j, k};
  int sign = 1;
  // bubble sort, counting transpositions
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t t = 0; t + 1 < 3; ++t) {
      if (idx[t] > idx[t + 1]) {
        std::swap(idx[t], idx[t + 1]);
        sign = -sign;
      }
    }
  }
  const Rat& v = coords.at(idx);
  return sign > 0 ? v : -v;
}

PlueckerVector pluecker(const Mat3xM& m) {
  const std::size_t n = m.cols();
  if (n < 3) throw DomainError("pluecker: need at least 3 columns");
  PlueckerVector p;
  p.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) p.coords.emplace(Triple{i, j, k}, minor3(m, {i, j, k}));
    }
  }
  return p;
}

PlueckerVector abs_map(const PlueckerVector& p) {
  PlueckerVector out = p;
  for (auto& [key, value] : out.coords) value = abs(value);
  return out;
}

std::vector<GpResidual> check_gp3(const PlueckerVector& p) {
  std::vector<GpResidual> out;
  const std::size_t n = p.n;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          for (std::size_t d = c + 1; d < n; ++d) {
            if (s == a || s == b || s == c || s == d) continue;
            const Rat r = p.signed_at(s, a, b) * p.signed_at(s, c, d) -
                          p.signed_at(s, a, c) * p.signed_at(s, b, d) +
                          p.signed_at(s, a, d) * p.signed_at(s, b, c);
            out.push_back(GpResidual{s, {a, b, c, d}, r});
          }
        }
      }
    }
  }
  return out;
}

IneqReport check_quad_ineq(const PlueckerVector& q, std::size_t m) {
  if (q.n != m + 2) throw DomainError("check_quad_ineq: expected n = m + 2");
  if (q.n < 5) throw DomainError("check_quad_ineq: need n >= 5");
  for (const auto& [key, value] : q.coords) {
    if (value.sign() < 0) throw DomainError("check_quad_ineq: negative coordinate");
  }
  const std::size_t e1 = m, e2 = m + 1;
  Rat triples, singles, with_e1, with_e2;
  for (std::size_t i = 0; i < m; ++i) {
    singles += q.at(i, e1, e2);
    for (std::size_t j = i + 1; j < m; ++j) {
      with_e1 += q.at(i, j, e1);
      with_e2 += q.at(i, j, e2);
      for (std::size_t k = j + 1; k < m; ++k) triples += q.at(i, j, k);
    }
  }
  const Rat lhs = triples * singles;
  return make_report(lhs, with_e1 * with_e2, lhs, with_e1, with_e2);
}

Mat3xM append_e1_e2(std::span<const Vec3> vectors) {
  Mat3xM m{std::vector<Vec3>(vectors.begin(), vectors.end())};
  m.columns.push_back(kE1);
  m.columns.push_back(kE2);
  return m;
}

}  // namespace zonomv
