// Command-line front end. Exit codes: 0 = every check holds, 1 = a violation
// was found, 2 = usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zonomv/errors.hpp"
#include "zonomv/grassmann.hpp"
#include "zonomv/io.hpp"
#include "zonomv/reduction.hpp"
#include "zonomv/sampling.hpp"
#include "zonomv/verify.hpp"
#include "zonomv/witness.hpp"
#include "zonomv/zonotope.hpp"

namespace {

using namespace zonomv;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t seed = 42;
  std::string mode = "exact";
  std::string output = "text";
  std::string out_path;

  // mixedvol / volume / check
  std::vector<std::string> inputs;
  std::string target;

  // fuzz
  std::size_t trials = 1000;
  std::size_t m_max = 6;
  std::int64_t coeff_bound = 16;

  // extremal
  std::string s1 = "1", s2 = "1", s3 = "1", s4 = "1";
  std::string lambda = "0", lambda_prime = "1", mu = "0", mu_prime = "1";

  // grassmann-sample
  std::string matrix_path;
  std::size_t columns = 6;

  bool csv() const { return output == "csv"; }
  bool exact() const { return mode == "exact"; }
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + cfg.out_path + "'");
  out << text;
}

void require_exact(const RunConfig& cfg, const char* command) {
  if (!cfg.exact()) throw UsageError(std::string(command) + " runs in exact mode only");
}

Zonotope3 load_zonotope(const std::string& path) { return parse_zonotope(read_file(path)); }

std::string value_line(const RunConfig& cfg, const Rat& v) {
  if (cfg.csv()) return "value\n" + v.str() + "\n";
  return v.str() + "  (" + decimal(v) + ")\n";
}

std::string float_line(const RunConfig& cfg, double v) {
  std::ostringstream os;
  os.precision(12);
  if (cfg.csv()) os << "value\n";
  os << v << "\n";
  return os.str();
}

int cmd_mixedvol(const RunConfig& cfg) {
  if (cfg.inputs.size() != 3) throw UsageError("mixedvol needs three zonotope files");
  const auto a = load_zonotope(cfg.inputs[0]);
  const auto b = load_zonotope(cfg.inputs[1]);
  const auto c = load_zonotope(cfg.inputs[2]);
  if (cfg.exact()) emit(cfg, value_line(cfg, mixed_volume(a, b, c)));
  else emit(cfg, float_line(cfg, mixed_volume_approx(a, b, c)));
  return kOk;
}

int cmd_volume(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1) throw UsageError("volume needs one zonotope or polytope file");
  const std::string text = read_file(cfg.inputs[0]);
  switch (detect_kind(text)) {
    case FileKind::zonotope: {
      const auto z = parse_zonotope(text);
      if (cfg.exact()) emit(cfg, value_line(cfg, volume(z)));
      else emit(cfg, float_line(cfg, volume_approx(z)));
      return kOk;
    }
    case FileKind::polytope:
      require_exact(cfg, "volume of a polytope");
      emit(cfg, value_line(cfg, volume_polytope(parse_polytope(text))));
      return kOk;
    case FileKind::matrix: break;
  }
  throw UsageError("volume expects a zonotope3 or polytope3 file");
}

int finish_check(const RunConfig& cfg, const IneqReport& r, const std::string& witness) {
  std::string out = cfg.csv() ? render_report_csv(r) : render_report_text(r);
  if (!r.holds) out += "violating input:\n" + witness;
  emit(cfg, out);
  return r.holds ? kOk : kViolation;
}

std::string concat_inputs(const std::vector<std::string>& paths) {
  std::string out;
  for (const auto& p : paths) out += "# " + p + "\n" + read_file(p);
  return out;
}

std::vector<Vec3> load_vectors(const std::string& path) {
  const std::string text = read_file(path);
  switch (detect_kind(text)) {
    case FileKind::matrix: return parse_matrix(text).columns;
    case FileKind::zonotope: return parse_zonotope(text).generators;
    case FileKind::polytope: break;
  }
  throw UsageError("expected a matrix or zonotope file");
}

int check_af_square_files(const RunConfig& cfg) {
  if (cfg.inputs.size() != 4) throw UsageError("check af-square needs files A B C D");
  std::vector<std::string> texts;
  for (const auto& p : cfg.inputs) texts.push_back(read_file(p));
  const bool all_zonotopes = std::all_of(texts.begin(), texts.end(), [](const std::string& t) {
    return detect_kind(t) == FileKind::zonotope;
  });
  if (all_zonotopes) {
    const auto r = check_af_square(parse_zonotope(texts[0]), parse_zonotope(texts[1]),
                                   parse_zonotope(texts[2]), parse_zonotope(texts[3]));
    return finish_check(cfg, r, concat_inputs(cfg.inputs));
  }
  // polytope A with segments B, C and D = A
  if (detect_kind(texts[0]) != FileKind::polytope || detect_kind(texts[3]) != FileKind::polytope) {
    throw UsageError("af-square with a polytope needs A = D polytope and segment files B, C");
  }
  const auto a = parse_polytope(texts[0]);
  if (!(parse_polytope(texts[3]) == a)) throw UsageError("af-square with a polytope needs D = A");
  const auto b = parse_zonotope(texts[1]);
  const auto c = parse_zonotope(texts[2]);
  if (b.size() != 1 || c.size() != 1) throw UsageError("af-square with a polytope needs single segments B, C");
  return finish_check(cfg, af_square_with_segments(a, b.generators[0], c.generators[0]),
                      concat_inputs(cfg.inputs));
}

int check_grassmann_file(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1) throw UsageError("check grassmann needs one matrix file");
  const auto m = parse_matrix(read_file(cfg.inputs[0]));
  if (m.cols() < 3) throw UsageError("check grassmann needs at least 3 columns");
  const auto p = pluecker(m);
  const auto residuals = check_gp3(p);
  std::size_t nonzero = 0;
  for (const auto& r : residuals) nonzero += r.value.is_zero() ? 0 : 1;

  std::optional<IneqReport> quad;
  if (m.cols() >= 5) quad = check_quad_ineq(abs_map(p), m.cols() - 2);

  std::string out;
  if (cfg.csv()) {
    out = "relations,nonzero_residuals\n" + std::to_string(residuals.size()) + "," + std::to_string(nonzero) + "\n";
    if (quad) out += render_report_csv(*quad);
  } else {
    out = "gp3 relations     = " + std::to_string(residuals.size()) + "\n";
    out += "nonzero residuals = " + std::to_string(nonzero) + "\n";
    if (quad) out += "quadratic inequality on |Pluecker| (m = " + std::to_string(m.cols() - 2) + "):\n" +
                     render_report_text(*quad);
  }
  const bool ok = nonzero == 0 && (!quad || quad->holds);
  if (!ok) out += "violating input:\n" + render_matrix(m);
  emit(cfg, out);
  return ok ? kOk : kViolation;
}

int cmd_check(const RunConfig& cfg) {
  require_exact(cfg, "check");
  if (cfg.target == "bezout") {
    if (cfg.inputs.size() != 3) throw UsageError("check bezout needs files A B C");
    const auto r = check_bezout(load_zonotope(cfg.inputs[0]), load_zonotope(cfg.inputs[1]),
                                load_zonotope(cfg.inputs[2]));
    return finish_check(cfg, r, concat_inputs(cfg.inputs));
  }
  if (cfg.target == "lemma") {
    if (cfg.inputs.size() != 1) throw UsageError("check lemma needs one matrix file");
    return finish_check(cfg, check_lemma_matrix(load_vectors(cfg.inputs[0])), concat_inputs(cfg.inputs));
  }
  if (cfg.target == "af-square" || cfg.target == "af_square") return check_af_square_files(cfg);
  if (cfg.target == "grassmann") return check_grassmann_file(cfg);
  throw UsageError("unknown check target '" + cfg.target + "'");
}

int cmd_fuzz(const RunConfig& cfg) {
  require_exact(cfg, "fuzz");
  FuzzConfig fc;
  fc.trials = cfg.trials;
  fc.m_max = cfg.m_max;
  fc.coeff_bound = cfg.coeff_bound;
  fc.seed = cfg.seed;
  try {
    fc.target = parse_fuzz_target(cfg.target);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const auto summary = [&] {
    try {
      return fuzz(fc);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }();
  emit(cfg, cfg.csv() ? render_fuzz_csv(summary) : render_fuzz_text(summary));
  return summary.failures == 0 ? kOk : kViolation;
}

int cmd_extremal(const RunConfig& cfg) {
  require_exact(cfg, "extremal");
  const SStats s{Rat::parse(cfg.s1), Rat::parse(cfg.s2), Rat::parse(cfg.s3), Rat::parse(cfg.s4)};
  ExtremalConfig ec;
  try {
    ec = extremal_config(s, Rat::parse(cfg.lambda), Rat::parse(cfg.lambda_prime), Rat::parse(cfg.mu),
                         Rat::parse(cfg.mu_prime));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const Rat aaa = volume(ec.a);
  const Rat abc = mixed_volume(ec.a, ec.b, ec.c);
  const Rat aab = mixed_volume(ec.a, ec.a, ec.b);
  const Rat aac = mixed_volume(ec.a, ec.a, ec.c);
  const bool square_zero = s.s1 * s.s4 == s.s2 * s.s3;
  const auto report = check_bezout(ec.a, ec.b, ec.c);
  const std::string ratio = report.ratio ? report.ratio->str() : std::string();

  std::string out;
  if (cfg.csv()) {
    out = "V_AAA,V_ABC,V_AAB,V_AAC,ratio,s1s4_eq_s2s3\n" + aaa.str() + "," + abc.str() + "," + aab.str() + "," +
          aac.str() + "," + ratio + "," + (square_zero ? "true" : "false") + "\n";
  } else {
    out = render_zonotope(ec.a);
    out += "V(A,A,A) = " + aaa.str() + "\n";
    out += "V(A,B,C) = " + abc.str() + "\n";
    out += "V(A,A,B) = " + aab.str() + "\n";
    out += "V(A,A,C) = " + aac.str() + "\n";
    out += "ratio    = " + (report.ratio ? ratio + "  (" + decimal(*report.ratio) + ")" : "undefined") + "\n";
    out += std::string("s1*s4 == s2*s3: ") + (square_zero ? "yes (equality)" : "no") + "\n";
  }
  emit(cfg, out);
  return report.holds ? kOk : kViolation;
}

int cmd_grassmann_sample(const RunConfig& cfg) {
  require_exact(cfg, "grassmann-sample");
  Mat3xM m;
  if (!cfg.matrix_path.empty()) {
    m = parse_matrix(read_file(cfg.matrix_path));
  } else {
    if (cfg.columns < 3) throw UsageError("--n must be >= 3");
    if (cfg.coeff_bound < 1) throw UsageError("--coeff-bound must be >= 1");
    SplitMix64 rng(cfg.seed);
    m.columns = random_vectors(rng, cfg.columns, cfg.coeff_bound);
  }
  if (m.cols() < 3) throw UsageError("need at least 3 columns");
  const auto p = pluecker(m);
  if (cfg.csv()) {
    emit(cfg, render_pluecker_csv(p));
  } else {
    emit(cfg, render_matrix(m) + "# pluecker coordinates i,j,k,value\n" + render_pluecker_csv(p));
  }
  return kOk;
}

// Reference computations: cube mixed volume, sharpness configuration,
// pyramid witness and the Grassmann equality instance.
int cmd_report(const RunConfig& cfg) {
  require_exact(cfg, "report");
  std::ostringstream os;
  bool ok = true;
  auto line = [&](const std::string& name, const Rat& got, const Rat& want) {
    const bool pass = got == want;
    ok = ok && pass;
    os << (pass ? "ok   " : "FAIL ") << name << " = " << got << " (expected " << want << ")\n";
  };

  const Zonotope3 cube{{kE1, kE2, kE3}};
  line("V(cube, [0,e1], [0,e2])", mixed_volume(cube, Zonotope3::segment(kE1), Zonotope3::segment(kE2)),
       Rat(1, 6));
  line("Vol(cube)", volume(cube), 1);

  const auto ec = extremal_config(SStats{1, 1, 1, 1}, 0, 1, 0, 1);
  line("tightness ratio, s = (1,1,1,1)", tightness_ratio(ec.a, ec.b, ec.c), Rat(3, 2));

  const auto pyramid = pyramid_equality_report();
  line("pyramid lhs", pyramid.lhs, Rat(1, 18));
  line("pyramid rhs", pyramid.rhs, Rat(1, 18));

  const auto quad = check_quad_ineq(abs_map(pluecker(append_e1_e2(ec.a.generators))), 4);
  line("Grassmann lhs", quad.lhs, 16);
  line("Grassmann rhs", quad.rhs, 16);

  emit(cfg, os.str());
  return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mixed volumes of zonotopes in R^3 and verification of mixed-volume inequalities"};
  app.require_subcommand(1);
  RunConfig cfg;

  app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  app.add_option("--mode", cfg.mode, "Scalar mode")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
  app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"text", "csv"}))->capture_default_str();
  app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");

  auto* mixedvol = app.add_subcommand("mixedvol", "Mixed volume V(A,B,C) of three zonotope files")->fallthrough();
  mixedvol->add_option("files", cfg.inputs, "A B C")->required();

  auto* vol = app.add_subcommand("volume", "Volume of a zonotope or polytope file")->fallthrough();
  vol->add_option("file", cfg.inputs, "input file")->required();

  auto* check = app.add_subcommand("check", "Check one inequality exactly")->fallthrough();
  check->add_option("--target", cfg.target, "bezout | lemma | af-square | grassmann")->required();
  check->add_option("files", cfg.inputs, "input files")->required();

  auto* fz = app.add_subcommand("fuzz", "Deterministic randomized check")->fallthrough();
  fz->add_option("--target", cfg.target, "bezout | lemma | af_square")->required();
  fz->add_option("--trials", cfg.trials)->capture_default_str();
  fz->add_option("--m-max", cfg.m_max)->capture_default_str();
  fz->add_option("--coeff-bound", cfg.coeff_bound)->capture_default_str();

  auto* ext = app.add_subcommand("extremal", "Four-generator extremal configuration")->fallthrough();
  ext->add_option("--s1", cfg.s1)->capture_default_str();
  ext->add_option("--s2", cfg.s2)->capture_default_str();
  ext->add_option("--s3", cfg.s3)->capture_default_str();
  ext->add_option("--s4", cfg.s4)->capture_default_str();
  ext->add_option("--lambda", cfg.lambda)->capture_default_str();
  ext->add_option("--lambda-prime", cfg.lambda_prime)->capture_default_str();
  ext->add_option("--mu", cfg.mu)->capture_default_str();
  ext->add_option("--mu-prime", cfg.mu_prime)->capture_default_str();

  auto* gs = app.add_subcommand("grassmann-sample", "Pluecker coordinates of a (random) 3 x n matrix")->fallthrough();
  gs->add_option("--matrix", cfg.matrix_path, "matrix file; random when omitted");
  gs->add_option("--n", cfg.columns, "column count of the random matrix")->capture_default_str();
  gs->add_option("--coeff-bound", cfg.coeff_bound)->capture_default_str();

  auto* rep = app.add_subcommand("report", "Reference values")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*mixedvol) return cmd_mixedvol(cfg);
    if (*vol) return cmd_volume(cfg);
    if (*check) return cmd_check(cfg);
    if (*fz) return cmd_fuzz(cfg);
    if (*ext) return cmd_extremal(cfg);
    if (*gs) return cmd_grassmann_sample(cfg);
    if (*rep) return cmd_report(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
