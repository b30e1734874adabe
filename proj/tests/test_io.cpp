#include "doctest.h"

#include "zonomv/errors.hpp"
#include "zonomv/io.hpp"
#include "zonomv/sampling.hpp"

using namespace zonomv;

TEST_CASE("zonotope file format") {
  const auto z = parse_zonotope("# unit cube\nzonotope3\n1 0 0\n\n0 1 0\n# third\n0 0 1/1\n");
  CHECK(z == Zonotope3{{kE1, kE2, kE3}});
  CHECK(render_zonotope(z) == "zonotope3\n1 0 0\n0 1 0\n0 0 1\n");
  CHECK(parse_zonotope("zonotope3\n").size() == 0);
  CHECK_THROWS_AS(parse_zonotope("polytope3\n1 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_zonotope("zonotope3\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_zonotope("zonotope3\n1 0 1/0\n"), ParseError);
  CHECK_THROWS_AS(parse_zonotope(""), ParseError);
}

TEST_CASE("matrix file format") {
  const auto m = parse_matrix("matrix 3 4\n1 0 0 1\n0 1 0 1\n0 0 1 -1/2\n");
  REQUIRE(m.cols() == 4);
  CHECK(m.columns[3] == Vec3{1, 1, Rat(-1, 2)});
  CHECK(render_matrix(m) == "matrix 3 4\n1 0 0 1\n0 1 0 1\n0 0 1 -1/2\n");
  CHECK_THROWS_AS(parse_matrix("matrix 3 2\n1 2\n3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("matrix 3 2\n1 2\n3 4\n5\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("matrix 2 2\n1 2\n3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("matrix 3 x\n1\n2\n3\n"), ParseError);
}

TEST_CASE("polytope file format") {
  const auto p = parse_polytope("polytope3\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n0 0 1\n");
  CHECK(p == square_pyramid());
  CHECK_THROWS_AS(parse_polytope("polytope3\n"), ParseError);
}

TEST_CASE("detect_kind") {
  CHECK(detect_kind("# c\nzonotope3\n") == FileKind::zonotope);
  CHECK(detect_kind("matrix 3 0\n\n\n\n") == FileKind::matrix);
  CHECK(detect_kind("polytope3\n0 0 0\n") == FileKind::polytope);
  CHECK_THROWS_AS(detect_kind("cube\n"), ParseError);
}

TEST_CASE("formats round-trip") {
  SplitMix64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const auto z = random_zonotope(rng, 7, 30);
    CHECK(parse_zonotope(render_zonotope(z)) == z);
    const Mat3xM m{random_vectors(rng, static_cast<std::size_t>(rng.uniform(0, 7)), 30)};
    CHECK(parse_matrix(render_matrix(m)) == m);
    const PolytopeV p{random_vectors(rng, static_cast<std::size_t>(rng.uniform(1, 7)), 30)};
    CHECK(parse_polytope(render_polytope(p)) == p);
  }
}

TEST_CASE("pluecker csv") {
  const auto p = pluecker(Mat3xM{{kE1, kE2, kE3, Vec3{1, 1, 1}}});
  CHECK(render_pluecker_csv(p) == "1,2,3,1\n1,2,4,1\n1,3,4,-1\n2,3,4,1\n");
}

TEST_CASE("report and fuzz rendering") {
  const auto r = make_report(1, Rat(3, 2), 1, 1, 1);
  CHECK(render_report_csv(r) == "lhs,rhs,slack,holds,ratio\n1,3/2,1/2,true,1\n");
  const auto undefined = make_report(0, 0, 0, 0, 1);
  CHECK(render_report_csv(undefined) == "lhs,rhs,slack,holds,ratio\n0,0,0,true,\n");

  FuzzSummary s;
  s.records.push_back(TrialRecord{0, FuzzTarget::lemma, 3, Rat(-5, 2), Rat(7, 3)});
  s.records.push_back(TrialRecord{1, FuzzTarget::lemma, 2, Rat(0), std::nullopt});
  CHECK(render_fuzz_csv(s) ==
        "trial,target,m,slack_num,slack_den,ratio_num,ratio_den\n0,lemma,3,-5,2,7,3\n1,lemma,2,0,1,,\n");
}
