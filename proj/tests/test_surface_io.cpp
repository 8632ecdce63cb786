#include "doctest.h"

#include "coble/scenarios.hpp"
#include "coble/surface_io.hpp"

#include <sstream>

using namespace coble;

namespace {

SurfaceModel parse(const std::string& text) {
  std::istringstream in(text);
  return parseSurface(in);
}

std::size_t errorLine(const std::string& text) {
  std::istringstream in(text);
  try {
    parseSurface(in);
  } catch (const SurfaceParseError& e) {
    return e.line;
  }
  return 0;
}

}  // namespace

TEST_CASE("parse a small surface") {
  SurfaceModel s = parse(
      "# toy\n"
      "surface X\n"
      "gen A self=1\n"
      "gen B self=-2\n"
      "pair A B 3\n"
      "class D = 2A - B   # inline comment\n"
      "canonical = -3A\n"
      "boundary D\n");
  CHECK(s.name == "X");
  CHECK(s.rank() == 2);
  CHECK(s.gram == IntMat{{1, 3}, {3, -2}});
  CHECK(s.namedClass("D").coeffs == RatVec{Rat(2), Rat(-1)});
  CHECK(s.canonical.coeffs == RatVec{Rat(-3), Rat(0)});
  CHECK(s.boundaryOrder == std::vector<std::string>{"D"});
  CHECK(s.canonical.surfaceName == "X");
}

TEST_CASE("expressions") {
  SurfaceModel s = parse(
      "surface X\n"
      "gen A self=1\n"
      "gen B self=-1\n"
      "class P = A + B\n"
      "class Q = 2P - 3B\n"
      "class R = -A\n"
      "class S = 4*B\n"
      "canonical = A\n");
  CHECK(s.namedClass("Q").coeffs == RatVec{Rat(2), Rat(-1)});
  CHECK(s.namedClass("R").coeffs == RatVec{Rat(-1), Rat(0)});
  CHECK(s.namedClass("S").coeffs == RatVec{Rat(0), Rat(4)});
}

TEST_CASE("boundary is optional, canonical is not") {
  SurfaceModel s = parse("surface X\ngen A self=-4\ncanonical = A\n");
  CHECK(s.boundaryOrder.empty());
  CHECK(errorLine("surface X\ngen A self=-4\n") == 3);  // EOF line
}

TEST_CASE("malformed lines report their line number") {
  // Line 1 must be the surface line.
  CHECK(errorLine("gen A self=1\n") == 1);
  // Unknown directive.
  CHECK(errorLine("surface X\nfrobnicate\n") == 2);
  // Bad gen syntax.
  CHECK(errorLine("surface X\ngen A\n") == 2);
  CHECK(errorLine("surface X\ngen A self=x\n") == 2);
  // Duplicate generator.
  CHECK(errorLine("surface X\ngen A self=1\ngen A self=1\n") == 3);
  // Pair of unknown or repeated labels.
  CHECK(errorLine("surface X\ngen A self=1\npair A B 1\n") == 3);
  CHECK(errorLine("surface X\ngen A self=1\npair A A 1\n") == 3);
  CHECK(errorLine("surface X\ngen A self=1\ngen B self=1\npair A B 1\npair B A 2\n") == 5);
  // Generators and pairs may not follow classes.
  CHECK(errorLine("surface X\ngen A self=1\nclass D = A\ngen B self=1\n") == 4);
  CHECK(errorLine("surface X\ngen A self=1\ngen B self=0\nclass D = A\npair A B 1\n") ==
        5);
  // Expression problems.
  CHECK(errorLine("surface X\ngen A self=1\nclass D = A + \n") == 3);
  CHECK(errorLine("surface X\ngen A self=1\nclass D = A B\n") == 3);
  CHECK(errorLine("surface X\ngen A self=1\nclass D = 2\n") == 3);
  CHECK(errorLine("surface X\ngen A self=1\nclass D = Z\n") == 3);
  // Duplicate class / canonical / boundary.
  CHECK(errorLine("surface X\ngen A self=1\nclass D = A\nclass D = 2A\n") == 4);
  CHECK(errorLine("surface X\ngen A self=1\ncanonical = A\ncanonical = A\n") == 4);
  CHECK(errorLine("surface X\ngen A self=1\nclass D = A\nboundary D\nboundary D\n") == 5);
  // Boundary of an unknown class.
  CHECK(errorLine("surface X\ngen A self=1\nboundary D\n") == 3);
  // Duplicate surface line.
  CHECK(errorLine("surface X\nsurface Y\n") == 2);
}

TEST_CASE("loadSurfaceFile prefixes the path and the sample file round-trips") {
  SurfaceModel fromFile = loadSurfaceFile(std::string(TEST_DATA_DIR) + "/section4.surface");
  SurfaceModel builtin = section4Surface();
  CHECK(fromFile.name == builtin.name);
  CHECK(fromFile.basisLabels == builtin.basisLabels);
  CHECK(fromFile.gram == builtin.gram);
  CHECK(fromFile.canonical.coeffs == builtin.canonical.coeffs);
  CHECK(fromFile.boundaryOrder == builtin.boundaryOrder);
  for (const std::string& name : {"C1", "C2"})
    CHECK(fromFile.namedClass(name).coeffs == builtin.namedClass(name).coeffs);
  CHECK(fromFile.namedClass("K").coeffs ==
        (builtin.basisClass("E1") - builtin.basisClass("E2")).coeffs);

  CHECK_THROWS_WITH_AS(loadSurfaceFile("/nonexistent/x.surface"),
                       "cannot open '/nonexistent/x.surface'", std::runtime_error);
}
