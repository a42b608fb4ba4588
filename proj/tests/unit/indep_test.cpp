#include <catch_amalgamated.hpp>

#include <cmath>

#include "idcode/errors.hpp"
#include "idcode/families.hpp"
#include "idcode/indep.hpp"
#include "support/oracles.hpp"

using namespace idcode;
using families::FamilySpec;
using indep::FractionProvider;

namespace {

Graph petersen() {
  return from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                             {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

// Subdivided claw: centre 0, paths 0 - a_i - b_i with a_i = 1,2,3 and b_i = 4,5,6.
Graph subdivided_claw() { return from_edge_list(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}}); }

double average_degree(const Graph& g) {
  return g.order() == 0 ? 0.0 : 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.order());
}

}  // namespace

TEST_CASE("Shearer set on small graphs", "[indep]") {
  CHECK(indep::shearer_independent_set(Graph(from_edge_list(5, {}))) == VertexSet::full(5));
  const Graph c6 = families::generate(FamilySpec::cycle(6));
  const VertexSet s6 = indep::shearer_independent_set(c6);
  CHECK(s6.size() == 3);
  CHECK(is_independent(c6, s6));
  const VertexSet sp = indep::shearer_independent_set(petersen());
  CHECK(sp.size() >= 4);
  CHECK(is_independent(petersen(), sp));
  CHECK_THROWS_AS(indep::shearer_independent_set(from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}})),
                  PreconditionError);
}

TEST_CASE("Shearer set meets the average-degree guarantee", "[indep]") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t n = 10 + seed % 60;
    const Graph g = families::generate(FamilySpec::random_triangle_free(n, n * (1 + seed % 5), seed));
    const VertexSet s = indep::shearer_independent_set(g);
    CHECK(is_independent(g, s));
    const double d = average_degree(g);
    const double f = (d == 0.0) ? 1.0 : (std::abs(d - 1.0) < 1e-9 ? 0.5 : oracle::shearer_ratio(d));
    CHECK(static_cast<double>(s.size()) >= f * static_cast<double>(n) - 1e-9);
    if (n <= 20) CHECK(s.size() <= oracle::max_independent_set(g));
  }
}

TEST_CASE("chromatic sets", "[indep]") {
  const Graph c6 = families::generate(FamilySpec::cycle(6));
  CHECK(indep::chromatic_independent_set(c6, 2) == VertexSet(6, {0, 2, 4}));
  const Graph k33 = families::generate(FamilySpec::complete_bipartite(3, 3));
  const VertexSet side = indep::chromatic_independent_set(k33, 2);
  CHECK(side.size() == 3);
  CHECK(is_independent(k33, side));
  CHECK_THROWS_AS(indep::chromatic_independent_set(families::generate(FamilySpec::cycle(5)), 2),
                  PreconditionError);
  CHECK(indep::chromatic_independent_set(families::generate(FamilySpec::cycle(5)), 3).size() == 2);
}

TEST_CASE("colourings are proper and respect k", "[indep]") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = oracle::degenerate_triangle_free(60, 3, seed);
    const auto colouring = indep::colour(g, 4);
    REQUIRE(colouring.has_value());
    for (const auto& [u, v] : g.edges()) CHECK((*colouring)[u] != (*colouring)[v]);
    for (std::size_t c : *colouring) CHECK(c < 4);
  }
  CHECK_FALSE(indep::colour(families::generate(FamilySpec::cycle(7)), 2).has_value());
  CHECK(indep::colour(families::generate(FamilySpec::cycle(8)), 2).has_value());
}

TEST_CASE("fraction providers", "[indep]") {
  const auto shearer = FractionProvider::shearer();
  CHECK(shearer.fraction(3).approx() == Catch::Approx((std::log(3.0) - 1.0) / 3.0));
  CHECK(shearer.guaranteed_fraction(20).approx() == Catch::Approx((std::log(20.0) - 1.0) / 20.0));
  CHECK_THROWS_AS(shearer.guaranteed_fraction(2), PreconditionError);
  const auto bip = FractionProvider::chromatic(2);
  CHECK(*bip.guaranteed_fraction(5).exact() == Rational(1, 3));
  CHECK(*FractionProvider::chromatic(4).guaranteed_fraction(5).exact() == Rational(1, 4));
  CHECK(bip.name() == "chromatic:2");
  CHECK_THROWS_AS(FractionProvider::chromatic(1), PreconditionError);
}

TEST_CASE("good independent set follows the degree-one construction", "[indep]") {
  const Graph p4 = families::generate(FamilySpec::path(4));
  const auto parts = indep::good_independent_set_parts(p4, p4.vertices(), FractionProvider::chromatic(2));
  CHECK(parts.s1 == VertexSet(4, {0, 3}));
  CHECK(parts.y2.empty());
  CHECK(parts.s == VertexSet(4, {0, 3}));

  CHECK_THROWS_AS(indep::good_independent_set(families::generate(FamilySpec::cycle(6)), VertexSet::full(6)),
                  PreconditionError);

  const Graph claw = subdivided_claw();
  const auto cp = indep::good_independent_set_parts(claw, claw.vertices());
  CHECK(cp.s1 == VertexSet(7, {4, 5, 6}));
  CHECK(cp.t1 == VertexSet::full(7));
  CHECK(cp.y2.empty());
  CHECK(cp.s == VertexSet(7, {4, 5, 6}));
}

TEST_CASE("good independent set rejects vertices with false twins", "[indep]") {
  const Graph star = families::generate(FamilySpec::star(5));
  try {
    indep::good_independent_set(star, VertexSet(5, {0, 1}));
    FAIL("expected false_twin_in_y");
  } catch (const PreconditionError& e) {
    CHECK(e.which() == Precondition::false_twin_in_y);
  }
}

TEST_CASE("good independent set properties on random graphs", "[indep]") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Graph g = oracle::connected_triangle_free(30 + seed % 40, 45 + seed % 50, seed);
    if (g.order() < 3 || g.max_degree() < 3) continue;
    const VertexSet y = false_twin_classes(g).without_twin;
    const VertexSet s = indep::good_independent_set(g, y);
    CHECK(s.is_subset_of(y));
    CHECK(is_independent(g, s));
    const double delta = static_cast<double>(g.max_degree());
    CHECK(static_cast<double>(s.size()) >=
          std::min(1.0 / 3.0, (std::log(delta) - 1.0) / delta) * static_cast<double>(y.size()) - 1e-9);
    for (Vertex u = 0; u < g.order(); ++u) {
      if (g.degree(u) != 1) continue;
      bool escape = false;
      const Vertex w = g.neighbors(u).front();
      for (Vertex x : g.neighbors(w)) escape = escape || (x != u && !s.contains(x));
      CHECK(escape);
    }
  }
}
