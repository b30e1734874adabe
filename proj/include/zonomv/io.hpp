#pragma once

#include <string>
#include <string_view>

#include "zonomv/grassmann.hpp"
#include "zonomv/verify.hpp"
#include "zonomv/witness.hpp"
#include "zonomv/zonotope.hpp"

// Plain-text formats. Blank lines and lines starting with '#' are ignored
// everywhere. Scalars use the rational literal syntax of Rat::parse.
//
//   zonotope3           matrix 3 n          polytope3
//   x y z               x_1 ... x_n         x y z
//   ...                 y_1 ... y_n         ...
//                       z_1 ... z_n

namespace zonomv {

enum class FileKind { zonotope, matrix, polytope };

/// Kind announced by the first non-comment line. Throws ParseError.
FileKind detect_kind(std::string_view text);

Zonotope3 parse_zonotope(std::string_view text);
Mat3xM parse_matrix(std::string_view text);
PolytopeV parse_polytope(std::string_view text);

std::string render_zonotope(const Zonotope3& z);
std::string render_matrix(const Mat3xM& m);
std::string render_polytope(const PolytopeV& p);

/// Whole file contents. Throws ParseError when the file cannot be read.
std::string read_file(const std::string& path);

/// "i,j,k,value" rows with 1-based indices, lexicographic order.
std::string render_pluecker_csv(const PlueckerVector& p);

/// Header "lhs,rhs,slack,holds,ratio" plus one row.
std::string render_report_csv(const IneqReport& r);
std::string render_report_text(const IneqReport& r);

/// Header "trial,target,m,slack_num,slack_den,ratio_num,ratio_den" and one row
/// per trial; ratio fields are empty when the ratio is undefined.
std::string render_fuzz_csv(const FuzzSummary& s);
std::string render_fuzz_text(const FuzzSummary& s);

}  // namespace zonomv
