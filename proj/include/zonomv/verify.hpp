#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zonomv/linalg.hpp"
#include "zonomv/zonotope.hpp"

namespace zonomv {

/// Outcome of one exact inequality check lhs <= rhs.
///
/// `ratio` is the left product divided by the right product with the
/// inequality's constant stripped (so for the Bezout check it is the
/// tightness ratio, bounded by 3/2). It is absent when a right-hand factor
/// vanishes.
struct IneqReport {
  Rat lhs;
  Rat rhs;
  Rat slack;
  bool holds = false;
  std::optional<Rat> ratio;
};

/// Builds a report from both sides and the two right-hand factors.
IneqReport make_report(Rat lhs, Rat rhs, const Rat& lhs_product, const Rat& rhs_factor1,
                       const Rat& rhs_factor2);

/// V(A,A,A) V(A,B,C) <= 3/2 V(A,A,B) V(A,A,C).
IneqReport check_bezout(const Zonotope3& a, const Zonotope3& b, const Zonotope3& c);

/// The four mixed volumes entering V(A,A,D) V(B,C,D) <= 2 V(A,B,D) V(A,C,D).
/// Lets non-zonotope bodies (see witness.hpp) reuse the same checker.
struct AfSquareValues {
  Rat aad, bcd, abd, acd;
};

IneqReport check_af_square(const AfSquareValues& v);
IneqReport check_af_square(const Zonotope3& a, const Zonotope3& b, const Zonotope3& c,
                           const Zonotope3& d);

/// (sum_{i<j<k} |det(a_i,a_j,a_k)|) * (sum_i |z_i|).
Rat lemma_lhs(std::span<const Vec3> vectors);
/// (sum_{i<j} |y_i z_j - y_j z_i|) * (sum_{i<j} |x_i z_j - x_j z_i|).
Rat lemma_rhs(std::span<const Vec3> vectors);
IneqReport check_lemma_matrix(std::span<const Vec3> vectors);

/// V(A,A,A) V(A,B,C) / (V(A,A,B) V(A,A,C)). Throws DomainError naming the
/// vanishing factor when a denominator factor is zero.
Rat tightness_ratio(const Zonotope3& a, const Zonotope3& b, const Zonotope3& c);

enum class FuzzTarget { bezout, lemma, af_square };

std::string to_string(FuzzTarget t);
/// Accepts "bezout", "lemma", "af_square" and "af-square".
FuzzTarget parse_fuzz_target(const std::string& name);

struct FuzzConfig {
  std::size_t trials = 1000;
  std::size_t m_max = 6;
  std::int64_t coeff_bound = 16;
  FuzzTarget target = FuzzTarget::bezout;
  std::uint64_t seed = 42;
};

struct TrialRecord {
  std::size_t trial = 0;
  FuzzTarget target = FuzzTarget::bezout;
  std::size_t m = 0;  // generator count of A (or vector count for the lemma)
  Rat slack;
  std::optional<Rat> ratio;
};

struct FuzzSummary {
  std::size_t trials = 0;
  std::size_t failures = 0;
  Rat min_slack;
  std::optional<Rat> max_ratio;
  std::string worst_case;  // serialized input of the minimum-slack trial
  std::uint64_t seed = 0;
  std::vector<TrialRecord> records;
};

/// Runs `trials` independent random checks of the configured inequality.
///
/// Trial t draws from SplitMix64(seed ^ t), so each trial is reproducible on
/// its own. Extremes are tie-broken by the lowest trial index.
/// Throws DomainError on trials == 0, m_max == 0 or coeff_bound < 1.
FuzzSummary fuzz(const FuzzConfig& config);

}  // namespace zonomv
