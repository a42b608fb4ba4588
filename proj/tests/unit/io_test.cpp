#include <catch_amalgamated.hpp>

#include <sstream>

#include "idcode/errors.hpp"
#include "idcode/families.hpp"
#include "idcode/io.hpp"

using namespace idcode;

TEST_CASE("edge lists round-trip", "[io]") {
  for (const auto& spec : {families::FamilySpec::kary_tree(2, 3), families::FamilySpec::subdivided_complete(4),
                           families::FamilySpec::random_triangle_free(40, 70, 9)}) {
    const Graph g = families::generate(spec);
    std::stringstream buffer;
    io::write_edge_list(buffer, g);
    CHECK(io::read_graph(buffer) == g);
  }
}

TEST_CASE("edge lists accept comments and blank lines", "[io]") {
  std::istringstream in("# a path\n3 2\n\n0 1  # first\n1 2\n");
  CHECK(io::read_graph(in) == families::generate(families::FamilySpec::path(3)));
}

TEST_CASE("DIMACS input is converted to 0-based ids", "[io]") {
  std::istringstream in("c four-cycle\np edge 4 4\ne 1 2\ne 2 3\nc middle\ne 3 4\ne 4 1\n");
  CHECK(io::read_graph(in) == families::generate(families::FamilySpec::cycle(4)));
}

TEST_CASE("malformed input is rejected", "[io]") {
  auto parse = [](const char* text) {
    std::istringstream in(text);
    return io::read_graph(in);
  };
  CHECK_THROWS_AS(parse(""), io::ParseError);
  CHECK_THROWS_AS(parse("3\n"), io::ParseError);
  CHECK_THROWS_AS(parse("3 2\n0 1\n"), io::ParseError);
  CHECK_THROWS_AS(parse("3 1\n0 x\n"), io::ParseError);
  CHECK_THROWS_AS(parse("p edge 3 1\ne 0 1\n"), io::ParseError);
  CHECK_THROWS_AS(parse("3 1\n1 1\n"), PreconditionError);
  CHECK_THROWS_AS(parse("3 1\n1 3\n"), PreconditionError);
  try {
    parse("2 1\n0 1 2\n");
    FAIL("expected a parse error");
  } catch (const io::ParseError& e) {
    CHECK(e.line() == 2);
  }
}
