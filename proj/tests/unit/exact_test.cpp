#include <catch_amalgamated.hpp>

#include <chrono>

#include "idcode/certify.hpp"
#include "idcode/errors.hpp"
#include "idcode/exact.hpp"
#include "idcode/families.hpp"
#include "support/oracles.hpp"

using namespace idcode;
using families::FamilySpec;

TEST_CASE("exact optimum on small families", "[exact]") {
  CHECK(exact::min_identifying_code(families::generate(FamilySpec::path(3))).size == 2);
  CHECK(exact::min_identifying_code(families::generate(FamilySpec::cycle(7))).size == 5);
  CHECK(exact::min_identifying_code(families::generate(FamilySpec::complete_bipartite(3, 3))).size == 4);
  CHECK(exact::min_identifying_code(families::generate(FamilySpec::cycle(4))).size == 3);
  CHECK(exact::min_identifying_code(families::generate(FamilySpec::star(5))).size == 4);
  CHECK(exact::min_identifying_code(Graph()).size == 0);
}

TEST_CASE("exact witnesses are identifying codes", "[exact]") {
  for (const auto& spec : {FamilySpec::cycle(9), FamilySpec::kary_tree(2, 3), FamilySpec::subdivided_complete(4),
                           FamilySpec::complete_bipartite(4, 4)}) {
    const Graph g = families::generate(spec);
    const auto result = exact::min_identifying_code(g);
    CHECK(result.witness.size() == result.size);
    CHECK(oracle::is_identifying(g, result.witness));
  }
}

TEST_CASE("pruned search, naive enumeration and the oracle agree", "[exact]") {
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Graph g = oracle::random_graph(4 + seed % 7, 0.35, seed);
    if (!is_identifiable(g)) continue;
    const auto fast = exact::min_identifying_code(g);
    const auto slow = exact::min_identifying_code_naive(g);
    CHECK(fast.size == slow.size);
    CHECK(fast.size == oracle::min_identifying_code(g));
    CHECK(fast.size >= oracle::lower_bound(g.order(), g.max_degree()));
    ++compared;
  }
  CHECK(compared > 30);
}

TEST_CASE("adding vertices to an identifying code keeps it identifying", "[exact]") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = oracle::connected_triangle_free(12, 16, seed);
    if (!is_identifiable(g)) continue;
    VertexSet code = exact::min_identifying_code(g).witness;
    for (Vertex v = 0; v < g.order(); ++v) {
      code.insert(v);
      CHECK(certify::is_identifying_code(g, code));
    }
  }
}

TEST_CASE("lower bound", "[exact]") {
  CHECK(exact::lower_bound(7, 2) == 4);
  CHECK(exact::lower_bound(6, 3) == 3);
  CHECK(exact::lower_bound(1, 1) == 1);
  for (std::size_t n = 1; n < 200; ++n) {
    for (std::size_t d = 1; d < 12; ++d) CHECK(exact::lower_bound(n, d) == oracle::lower_bound(n, d));
  }
}

TEST_CASE("exact solver preconditions", "[exact]") {
  CHECK_THROWS_AS(exact::min_identifying_code(families::generate(FamilySpec::path(2))), PreconditionError);
  try {
    exact::min_identifying_code(families::generate(FamilySpec::path(17)));
    FAIL("expected the vertex limit to trip");
  } catch (const PreconditionError& e) {
    CHECK(e.which() == Precondition::too_many_vertices);
  }
  CHECK(exact::min_identifying_code(families::generate(FamilySpec::path(17)), 20).size == 9);
  CHECK_THROWS_AS(exact::min_identifying_code(families::generate(FamilySpec::path(70)), 100),
                  PreconditionError);
}
