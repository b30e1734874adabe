#include "zonomv/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "zonomv/errors.hpp"

namespace zonomv {

namespace {

// Non-comment, non-blank lines split into whitespace-separated tokens.
std::vector<std::vector<std::string>> content_lines(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    out.push_back(std::move(tokens));
  }
  return out;
}

Vec3 parse_point(const std::vector<std::string>& tokens, std::size_t line_no) {
  if (tokens.size() != 3) {
    throw ParseError("line " + std::to_string(line_no) + ": expected 3 rationals, got " +
                     std::to_string(tokens.size()));
  }
  return Vec3{Rat::parse(tokens[0]), Rat::parse(tokens[1]), Rat::parse(tokens[2])};
}

std::vector<Vec3> parse_point_list(std::string_view text, const char* header) {
  const auto lines = content_lines(text);
  if (lines.empty() || lines.front().size() != 1 || lines.front().front() != header) {
    throw ParseError(std::string("expected header '") + header + "'");
  }
  std::vector<Vec3> pts;
  for (std::size_t i = 1; i < lines.size(); ++i) pts.push_back(parse_point(lines[i], i + 1));
  return pts;
}

std::string render_point_list(const std::vector<Vec3>& pts, const char* header) {
  std::string out = std::string(header) + "\n";
  for (const auto& p : pts) out += p.x.str() + " " + p.y.str() + " " + p.z.str() + "\n";
  return out;
}

std::string optional_str(const std::optional<Rat>& q) { return q ? q->str() : std::string(); }

}  // namespace

FileKind detect_kind(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty input");
  const auto& head = lines.front().front();
  if (head == "zonotope3") return FileKind::zonotope;
  if (head == "matrix") return FileKind::matrix;
  if (head == "polytope3") return FileKind::polytope;
  throw ParseError("unknown file header '" + head + "'");
}

Zonotope3 parse_zonotope(std::string_view text) { return Zonotope3{parse_point_list(text, "zonotope3")}; }

PolytopeV parse_polytope(std::string_view text) {
  PolytopeV p{parse_point_list(text, "polytope3")};
  if (p.vertices.empty()) throw ParseError("polytope3 needs at least one vertex");
  return p;
}

Mat3xM parse_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty() || lines.front().size() != 3 || lines.front()[0] != "matrix" ||
      lines.front()[1] != "3") {
    throw ParseError("expected header 'matrix 3 n'");
  }
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(lines.front()[2], &used);
    if (used != lines.front()[2].size()) throw ParseError("bad column count");
  } catch (const std::logic_error&) {
    throw ParseError("bad column count '" + lines.front()[2] + "'");
  }
  if (n == 0 && lines.size() == 1) return Mat3xM{};  // the three rows are empty lines
  if (lines.size() != 4) throw ParseError("matrix needs exactly 3 rows");
  Mat3xM m;
  m.columns.resize(n);
  for (std::size_t r = 0; r < 3; ++r) {
    const auto& row = lines[r + 1];
    if (row.size() != n) {
      throw ParseError("matrix row " + std::to_string(r + 1) + ": expected " + std::to_string(n) +
                       " entries, got " + std::to_string(row.size()));
    }
    for (std::size_t j = 0; j < n; ++j) m.columns[j][r] = Rat::parse(row[j]);
  }
  return m;
}

std::string render_zonotope(const Zonotope3& z) { return render_point_list(z.generators, "zonotope3"); }
std::string render_polytope(const PolytopeV& p) { return render_point_list(p.vertices, "polytope3"); }

std::string render_matrix(const Mat3xM& m) {
  std::string out = "matrix 3 " + std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m.columns[j][r].str();
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string render_pluecker_csv(const PlueckerVector& p) {
  std::string out;
  for (const auto& [key, value] : p.coords) {
    out += std::to_string(key[0] + 1) + "," + std::to_string(key[1] + 1) + "," +
           std::to_string(key[2] + 1) + "," + value.str() + "\n";
  }
  return out;
}

std::string render_report_csv(const IneqReport& r) {
  return "lhs,rhs,slack,holds,ratio\n" + r.lhs.str() + "," + r.rhs.str() + "," + r.slack.str() + "," +
         (r.holds ? "true" : "false") + "," + optional_str(r.ratio) + "\n";
}

std::string render_report_text(const IneqReport& r) {
  std::string out;
  out += "lhs   = " + r.lhs.str() + "  (" + decimal(r.lhs) + ")\n";
  out += "rhs   = " + r.rhs.str() + "  (" + decimal(r.rhs) + ")\n";
  out += "slack = " + r.slack.str() + "  (" + decimal(r.slack) + ")\n";
  out += "ratio = " + (r.ratio ? r.ratio->str() + "  (" + decimal(*r.ratio) + ")" : "undefined") + "\n";
  out += std::string("holds = ") + (r.holds ? "yes" : "NO") + "\n";
  return out;
}

std::string render_fuzz_csv(const FuzzSummary& s) {
  std::string out = "trial,target,m,slack_num,slack_den,ratio_num,ratio_den\n";
  for (const auto& rec : s.records) {
    out += std::to_string(rec.trial) + "," + to_string(rec.target) + "," + std::to_string(rec.m) + "," +
           rec.slack.num_str() + "," + rec.slack.den_str() + ",";
    if (rec.ratio) out += rec.ratio->num_str() + "," + rec.ratio->den_str();
    else out += ",";
    out += "\n";
  }
  return out;
}

std::string render_fuzz_text(const FuzzSummary& s) {
  std::string out;
  out += "seed      = " + std::to_string(s.seed) + "\n";
  out += "trials    = " + std::to_string(s.trials) + "\n";
  out += "failures  = " + std::to_string(s.failures) + "\n";
  out += "min_slack = " + s.min_slack.str() + "  (" + decimal(s.min_slack) + ")\n";
  out += "max_ratio = " + (s.max_ratio ? s.max_ratio->str() + "  (" + decimal(*s.max_ratio) + ")" : "undefined") +
         "\n";
  out += "worst case input:\n" + s.worst_case;
  return out;
}

}  // namespace zonomv
