#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zonomv/linalg.hpp"
#include "zonomv/zonotope.hpp"

// Computable pieces of the two-valued reduction of the matrix-minor
// inequality: with z fixed (all z_i != 0), both sides are piecewise linear in
// x and in y, affine on the cells of the braid arrangement x_i/z_i = x_j/z_j,
// and every cell is spanned by the points whose ratio sequence takes at most
// two values. On those points both sides have closed forms in four
// aggregates s1..s4, and the gap is a perfect square.

namespace zonomv {

/// A two-valued point: x_i = lo * z_i for i in E (membership[i] true) and
/// x_i = hi * z_i otherwise.
struct TwoValuePattern {
  std::vector<bool> membership;
  Rat lo;
  Rat hi;
};

/// |z| summed over the four blocks E∩F, E∩F', E'∩F, E'∩F'.
struct SStats {
  Rat s1, s2, s3, s4;
  friend bool operator==(const SStats&, const SStats&) = default;
};

/// Permutation (0-based) sorting the ratios x_i / z_i ascending.
struct BraidCell {
  std::vector<std::size_t> sigma;
  friend bool operator==(const BraidCell&, const BraidCell&) = default;
};

std::vector<Rat> generating_point(const TwoValuePattern& p, std::span<const Rat> z);

/// sum_{i<j} |x_i z_j - x_j z_i|.
Rat g_direct(std::span<const Rat> x, std::span<const Rat> z);

/// |lo - hi| * (sum_{E} |z_i|) * (sum_{E'} |z_i|).
Rat g_closed_form(const TwoValuePattern& p, std::span<const Rat> z);

SStats s_stats(const std::vector<bool>& in_e, const std::vector<bool>& in_f, std::span<const Rat> z);

/// (sum_{i<j<k} |det((x,y,z)_i, (x,y,z)_j, (x,y,z)_k)|) * sum_i |z_i|.
Rat f_direct(std::span<const Rat> x, std::span<const Rat> y, std::span<const Rat> z);

/// dl * dm * e3(s) * e1(s), with dl = |lambda - lambda'| and dm = |mu - mu'|.
/// Throws DomainError if dl or dm is negative.
Rat f_closed_form(const SStats& s, const Rat& dl, const Rat& dm);

struct SlackIdentity {
  Rat slack;   // (s1+s2)(s3+s4)(s1+s3)(s2+s4) - e3(s) e1(s)
  Rat square;  // (s1 s4 - s2 s3)^2
};

SlackIdentity slack_identity(const SStats& s);

/// Ties are broken by ascending index. Throws DomainError if some z_i == 0.
BraidCell braid_cell_of(std::span<const Rat> x, std::span<const Rat> z);

/// Midpoint convexity of x -> f_direct(x, y, z) between x0 and x1, checked
/// exactly. Always true; returning false would falsify convexity.
bool biconvexity_probe(std::span<const Rat> x0, std::span<const Rat> x1, std::span<const Rat> y,
                       std::span<const Rat> z);

struct ExtremalConfig {
  Zonotope3 a, b, c;
};

/// A = s1[0,(l,m,1)] + s2[0,(l,m',1)] + s3[0,(l',m,1)] + s4[0,(l',m',1)] with
/// zero-weight summands omitted, B = [0,e1], C = [0,e2].
/// Throws DomainError on a negative weight.
ExtremalConfig extremal_config(const SStats& s, const Rat& lambda, const Rat& lambda_prime,
                               const Rat& mu, const Rat& mu_prime);

}  // namespace zonomv
