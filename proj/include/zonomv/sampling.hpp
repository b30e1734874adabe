#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zonomv/linalg.hpp"
#include "zonomv/rng.hpp"
#include "zonomv/zonotope.hpp"

namespace zonomv {

// Random exact inputs shared by the fuzz harness, the acceptance suite and
// the property tests. Numerators are drawn from [-bound, bound] and
// denominators from [1, bound], so zero occurs with probability 1/(2*bound+1).

Rat random_rat(SplitMix64& rng, std::int64_t bound);
Rat random_positive_rat(SplitMix64& rng, std::int64_t bound);
Vec3 random_vec3(SplitMix64& rng, std::int64_t bound);
std::vector<Vec3> random_vectors(SplitMix64& rng, std::size_t m, std::int64_t bound);

/// Generator count drawn uniformly from [1, m_max].
Zonotope3 random_zonotope(SplitMix64& rng, std::size_t m_max, std::int64_t bound);

/// Like random_vectors, but each z coordinate is forced to 0 with
/// probability zero_num/zero_den.
std::vector<Vec3> random_vectors_sparse_z(SplitMix64& rng, std::size_t m, std::int64_t bound,
                                          std::uint64_t zero_num, std::uint64_t zero_den);

Mat3 random_mat3(SplitMix64& rng, std::int64_t bound);

}  // namespace zonomv
