#include "zonomv/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "zonomv/errors.hpp"

namespace zonomv {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DomainError(std::string(what) + ": length mismatch");
}

}  // namespace

std::vector<Rat> generating_point(const TwoValuePattern& p, std::span<const Rat> z) {
  require_same_length(p.membership.size(), z.size(), "generating_point");
  std::vector<Rat> x;
  x.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) x.push_back((p.membership[i] ? p.lo : p.hi) * z[i]);
  return x;
}

Rat g_direct(std::span<const Rat> x, std::span<const Rat> z) {
  require_same_length(x.size(), z.size(), "g_direct");
  Rat sum;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) sum += abs(det2(x[i], x[j], z[i], z[j]));
  }
  return sum;
}

Rat g_closed_form(const TwoValuePattern& p, std::span<const Rat> z) {
  require_same_length(p.membership.size(), z.size(), "g_closed_form");
  Rat in_e, in_e_prime;
  for (std::size_t i = 0; i < z.size(); ++i) (p.membership[i] ? in_e : in_e_prime) += abs(z[i]);
  return abs(p.lo - p.hi) * in_e * in_e_prime;
}

SStats s_stats(const std::vector<bool>& in_e, const std::vector<bool>& in_f, std::span<const Rat> z) {
  require_same_length(in_e.size(), z.size(), "s_stats");
  require_same_length(in_f.size(), z.size(), "s_stats");
  SStats s;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Rat& slot = in_e[i] ? (in_f[i] ? s.s1 : s.s2) : (in_f[i] ? s.s3 : s.s4);
    slot += abs(z[i]);
  }
  return s;
}

Rat f_direct(std::span<const Rat> x, std::span<const Rat> y, std::span<const Rat> z) {
  require_same_length(x.size(), z.size(), "f_direct");
  require_same_length(y.size(), z.size(), "f_direct");
  const std::size_t m = z.size();
  std::vector<Vec3> cols;
  cols.reserve(m);
  for (std::size_t i = 0; i < m; ++i) cols.push_back(Vec3{x[i], y[i], z[i]});
  Rat triples, zsum;
  for (std::size_t i = 0; i < m; ++i) {
    zsum += abs(z[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) triples += abs(det3(cols[i], cols[j], cols[k]));
    }
  }
  return triples * zsum;
}

Rat f_closed_form(const SStats& s, const Rat& dl, const Rat& dm) {
  if (dl.sign() < 0 || dm.sign() < 0) {
    throw DomainError("f_closed_form: |lambda - lambda'| and |mu - mu'| must be nonnegative");
  }
  const Rat e3 = s.s2 * s.s3 * s.s4 + s.s1 * s.s3 * s.s4 + s.s1 * s.s2 * s.s4 + s.s1 * s.s2 * s.s3;
  const Rat e1 = s.s1 + s.s2 + s.s3 + s.s4;
  return dl * dm * e3 * e1;
}

SlackIdentity slack_identity(const SStats& s) {
  const Rat four = (s.s1 + s.s2) * (s.s3 + s.s4) * (s.s1 + s.s3) * (s.s2 + s.s4);
  const Rat d = s.s1 * s.s4 - s.s2 * s.s3;
  return SlackIdentity{four - f_closed_form(s, 1, 1), d * d};
}

BraidCell braid_cell_of(std::span<const Rat> x, std::span<const Rat> z) {
  require_same_length(x.size(), z.size(), "braid_cell_of");
  std::vector<Rat> ratio;
  ratio.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].is_zero()) throw DomainError("braid_cell_of: z_" + std::to_string(i + 1) + " is zero");
    ratio.push_back(x[i] / z[i]);
  }
  BraidCell cell;
  cell.sigma.resize(z.size());
  std::iota(cell.sigma.begin(), cell.sigma.end(), std::size_t{0});
  std::stable_sort(cell.sigma.begin(), cell.sigma.end(),
                   [&](std::size_t a, std::size_t b) { return ratio[a] < ratio[b]; });
  return cell;
}

bool biconvexity_probe(std::span<const Rat> x0, std::span<const Rat> x1, std::span<const Rat> y,
                       std::span<const Rat> z) {
  require_same_length(x0.size(), z.size(), "biconvexity_probe");
  require_same_length(x1.size(), z.size(), "biconvexity_probe");
  std::vector<Rat> mid;
  mid.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) mid.push_back((x0[i] + x1[i]) / Rat(2));
  const Rat f_mid = f_direct(mid, y, z);
  const Rat f_avg = (f_direct(x0, y, z) + f_direct(x1, y, z)) / Rat(2);
  return f_mid <= f_avg;
}

ExtremalConfig extremal_config(const SStats& s, const Rat& lambda, const Rat& lambda_prime,
                               const Rat& mu, const Rat& mu_prime) {
  const std::array<const Rat*, 4> weights{&s.s1, &s.s2, &s.s3, &s.s4};
  const std::array<Vec3, 4> directions{Vec3{lambda, mu, 1}, Vec3{lambda, mu_prime, 1},
                                       Vec3{lambda_prime, mu, 1}, Vec3{lambda_prime, mu_prime, 1}};
  ExtremalConfig cfg;
  for (std::size_t k = 0; k < 4; ++k) {
    if (weights[k]->sign() < 0) throw DomainError("extremal_config: negative weight s" + std::to_string(k + 1));
    if (weights[k]->is_zero()) continue;
    cfg.a.generators.push_back(*weights[k] * directions[k]);
  }
  cfg.b = Zonotope3::segment(kE1);
  cfg.c = Zonotope3::segment(kE2);
  return cfg;
}

}  // namespace zonomv
