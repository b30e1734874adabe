#include "zonomv/verify.hpp"

#include "zonomv/errors.hpp"
#include "zonomv/io.hpp"
#include "zonomv/rng.hpp"
#include "zonomv/sampling.hpp"

namespace zonomv {

IneqReport make_report(Rat lhs, Rat rhs, const Rat& lhs_product, const Rat& rhs_factor1,
                       const Rat& rhs_factor2) {
  IneqReport r;
  r.slack = rhs - lhs;
  r.holds = r.slack.sign() >= 0;
  if (!rhs_factor1.is_zero() && !rhs_factor2.is_zero()) {
    r.ratio = lhs_product / (rhs_factor1 * rhs_factor2);
  }
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

IneqReport check_bezout(const Zonotope3& a, const Zonotope3& b, const Zonotope3& c) {
  const Rat vol = volume(a);
  const Rat abc = mixed_volume(a, b, c);
  const Rat aab = mixed_volume(a, a, b);
  const Rat aac = mixed_volume(a, a, c);
  const Rat product = vol * abc;
  return make_report(product, Rat(3, 2) * aab * aac, product, aab, aac);
}

IneqReport check_af_square(const AfSquareValues& v) {
  const Rat product = v.aad * v.bcd;
  return make_report(product, Rat(2) * v.abd * v.acd, product, v.abd, v.acd);
}

IneqReport check_af_square(const Zonotope3& a, const Zonotope3& b, const Zonotope3& c,
                           const Zonotope3& d) {
  return check_af_square(AfSquareValues{mixed_volume(a, a, d), mixed_volume(b, c, d),
                                        mixed_volume(a, b, d), mixed_volume(a, c, d)});
}

namespace {

Rat triple_minor_sum(std::span<const Vec3> v) {
  Rat sum;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      for (std::size_t k = j + 1; k < v.size(); ++k) sum += abs(det3(v[i], v[j], v[k]));
    }
  }
  return sum;
}

// sum_{i<j} |det(row_p; z)| restricted to columns i, j, with row_p = x or y.
Rat pair_minor_sum(std::span<const Vec3> v, std::size_t row) {
  Rat sum;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      sum += abs(det2(v[i][row], v[j][row], v[i].z, v[j].z));
    }
  }
  return sum;
}

Rat abs_z_sum(std::span<const Vec3> v) {
  Rat sum;
  for (const auto& a : v) sum += abs(a.z);
  return sum;
}

}  // namespace

Rat lemma_lhs(std::span<const Vec3> vectors) {
  return triple_minor_sum(vectors) * abs_z_sum(vectors);
}

Rat lemma_rhs(std::span<const Vec3> vectors) {
  return pair_minor_sum(vectors, 1) * pair_minor_sum(vectors, 0);
}

IneqReport check_lemma_matrix(std::span<const Vec3> vectors) {
  const Rat yz = pair_minor_sum(vectors, 1);
  const Rat xz = pair_minor_sum(vectors, 0);
  const Rat lhs = lemma_lhs(vectors);
  return make_report(lhs, yz * xz, lhs, yz, xz);
}

Rat tightness_ratio(const Zonotope3& a, const Zonotope3& b, const Zonotope3& c) {
  const Rat aab = mixed_volume(a, a, b);
  if (aab.is_zero()) throw DomainError("tightness_ratio: V(A,A,B) vanishes");
  const Rat aac = mixed_volume(a, a, c);
  if (aac.is_zero()) throw DomainError("tightness_ratio: V(A,A,C) vanishes");
  return volume(a) * mixed_volume(a, b, c) / (aab * aac);
}

std::string to_string(FuzzTarget t) {
  switch (t) {
    case FuzzTarget::bezout: return "bezout";
    case FuzzTarget::lemma: return "lemma";
    case FuzzTarget::af_square: return "af_square";
  }
  return "?";
}

FuzzTarget parse_fuzz_target(const std::string& name) {
  if (name == "bezout") return FuzzTarget::bezout;
  if (name == "lemma") return FuzzTarget::lemma;
  if (name == "af_square" || name == "af-square") return FuzzTarget::af_square;
  throw DomainError("unknown fuzz target '" + name + "'");
}

namespace {

struct Trial {
  IneqReport report;
  std::size_t m = 0;
  std::string input;
};

std::string labelled(const char* label, const Zonotope3& z) {
  return std::string("# ") + label + "\n" + render_zonotope(z);
}

Trial run_trial(const FuzzConfig& cfg, SplitMix64& rng) {
  Trial t;
  switch (cfg.target) {
    case FuzzTarget::bezout: {
      const auto a = random_zonotope(rng, cfg.m_max, cfg.coeff_bound);
      const auto b = random_zonotope(rng, cfg.m_max, cfg.coeff_bound);
      const auto c = random_zonotope(rng, cfg.m_max, cfg.coeff_bound);
      t.report = check_bezout(a, b, c);
      t.m = a.size();
      t.input = labelled("A", a) + labelled("B", b) + labelled("C", c);
      break;
    }
    case FuzzTarget::lemma: {
      const auto m = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(cfg.m_max)));
      const auto v = random_vectors(rng, m, cfg.coeff_bound);
      t.report = check_lemma_matrix(v);
      t.m = m;
      t.input = render_matrix(Mat3xM{v});
      break;
    }
    case FuzzTarget::af_square: {
      const auto a = random_zonotope(rng, cfg.m_max, cfg.coeff_bound);
      const auto b = random_zonotope(rng, cfg.m_max, cfg.coeff_bound);
      const auto c = random_zonotope(rng, cfg.m_max, cfg.coeff_bound);
      const auto d = random_zonotope(rng, cfg.m_max, cfg.coeff_bound);
      t.report = check_af_square(a, b, c, d);
      t.m = a.size();
      t.input = labelled("A", a) + labelled("B", b) + labelled("C", c) + labelled("D", d);
      break;
    }
  }
  return t;
}

}  // namespace

FuzzSummary fuzz(const FuzzConfig& config) {
  if (config.trials == 0) throw DomainError("fuzz: trials must be >= 1");
  if (config.m_max == 0) throw DomainError("fuzz: m_max must be >= 1");
  if (config.coeff_bound < 1) throw DomainError("fuzz: coeff_bound must be >= 1");

  FuzzSummary s;
  s.trials = config.trials;
  s.seed = config.seed;
  s.records.reserve(config.trials);
  for (std::size_t i = 0; i < config.trials; ++i) {
    SplitMix64 rng(config.seed ^ static_cast<std::uint64_t>(i));
    Trial t = run_trial(config, rng);
    if (!t.report.holds) ++s.failures;
    if (i == 0 || t.report.slack < s.min_slack) {
      s.min_slack = t.report.slack;
      s.worst_case = std::move(t.input);
    }
    if (t.report.ratio && (!s.max_ratio || *s.max_ratio < *t.report.ratio)) {
      s.max_ratio = t.report.ratio;
    }
    s.records.push_back(TrialRecord{i, config.target, t.m, t.report.slack, t.report.ratio});
  }
  return s;
}

}  // namespace zonomv
