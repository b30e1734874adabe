#include "zonomv/sampling.hpp"

namespace zonomv {

Rat random_rat(SplitMix64& rng, std::int64_t bound) {
  const auto num = rng.uniform(-bound, bound);
  const auto den = rng.uniform(1, bound);
  return Rat(static_cast<long>(num), static_cast<long>(den));
}

Rat random_positive_rat(SplitMix64& rng, std::int64_t bound) {
  const auto num = rng.uniform(1, bound);
  const auto den = rng.uniform(1, bound);
  return Rat(static_cast<long>(num), static_cast<long>(den));
}

Vec3 random_vec3(SplitMix64& rng, std::int64_t bound) {
  Vec3 v;
  v.x = random_rat(rng, bound);
  v.y = random_rat(rng, bound);
  v.z = random_rat(rng, bound);
  return v;
}

std::vector<Vec3> random_vectors(SplitMix64& rng, std::size_t m, std::int64_t bound) {
  std::vector<Vec3> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.push_back(random_vec3(rng, bound));
  return out;
}

Zonotope3 random_zonotope(SplitMix64& rng, std::size_t m_max, std::int64_t bound) {
  const auto m = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(m_max)));
  return Zonotope3{random_vectors(rng, m, bound)};
}

std::vector<Vec3> random_vectors_sparse_z(SplitMix64& rng, std::size_t m, std::int64_t bound,
                                          std::uint64_t zero_num, std::uint64_t zero_den) {
  auto out = random_vectors(rng, m, bound);
  for (auto& v : out) {
    if (rng.chance(zero_num, zero_den)) v.z = 0;
  }
  return out;
}

Mat3 random_mat3(SplitMix64& rng, std::int64_t bound) {
  Mat3 m;
  for (auto& row : m.rows) {
    for (auto& e : row) e = random_rat(rng, bound);
  }
  return m;
}

}  // namespace zonomv
