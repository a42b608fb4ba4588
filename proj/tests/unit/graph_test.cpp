#include <catch_amalgamated.hpp>

#include <algorithm>

#include "idcode/errors.hpp"
#include "idcode/families.hpp"
#include "idcode/graph.hpp"
#include "support/oracles.hpp"

using namespace idcode;

namespace {

Graph petersen() {
  return from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                             {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph cycle(std::size_t n) { return families::generate(families::FamilySpec::cycle(n)); }
Graph path(std::size_t n) { return families::generate(families::FamilySpec::path(n)); }

}  // namespace

TEST_CASE("edge lists build simple graphs", "[graph]") {
  const Graph p3 = from_edge_list(3, {{0, 1}, {1, 2}});
  CHECK(p3.order() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.degree(1) == 2);
  CHECK(p3 == path(3));

  const Graph c4 = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4 == cycle(4));
  CHECK(c4.average_degree() == Rational(2));

  CHECK_THROWS_AS(from_edge_list(3, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(from_edge_list(3, {{0, 3}}), PreconditionError);

  const std::vector<Edge> repeated = {{0, 1}, {1, 0}, {0, 1}, {1, 2}};
  EdgeListStats stats;
  const Graph g = from_edge_list(3, repeated, &stats);
  CHECK(g.edge_count() == 2);
  CHECK(stats.duplicates_dropped == 2);
}

TEST_CASE("closed balls", "[graph]") {
  const Graph p3 = path(3);
  CHECK(closed_ball(p3, 1) == VertexSet(3, {0, 1, 2}));
  CHECK(closed_ball(p3, 0) == VertexSet(3, {0, 1}));
  CHECK(closed_ball(cycle(4), 0) == VertexSet(4, {3, 0, 1}));
  CHECK_THROWS(closed_ball(p3, 3));
}

TEST_CASE("triangle detection", "[graph]") {
  CHECK_FALSE(is_triangle_free(from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK(is_triangle_free(cycle(5)));
  CHECK(is_triangle_free(petersen()));
  const auto t = find_triangle(from_edge_list(5, {{0, 1}, {1, 2}, {3, 4}, {2, 4}, {1, 4}}));
  REQUIRE(t.has_value());
  CHECK(*t == std::array<Vertex, 3>{1, 2, 4});
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = oracle::random_graph(12, 0.2, seed);
    CHECK(is_triangle_free(g) == !oracle::has_triangle(g));
  }
}

TEST_CASE("identifiability", "[graph]") {
  CHECK_FALSE(is_identifiable(path(2)));
  CHECK(is_identifiable(path(3)));
  CHECK_FALSE(is_identifiable(families::generate(families::FamilySpec::complete_bipartite(1, 1))));
  const Graph k4 = from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(is_identifiable(k4));
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = oracle::random_graph(10, 0.3, seed);
    CHECK(is_identifiable(g) == !oracle::has_twins(g));
  }
}

TEST_CASE("false twin classes", "[graph]") {
  const auto c4 = false_twin_classes(cycle(4));
  REQUIRE(c4.nontrivial.size() == 2);
  CHECK(c4.nontrivial[0] == VertexSet(4, {0, 2}));
  CHECK(c4.nontrivial[1] == VertexSet(4, {1, 3}));

  const auto star = false_twin_classes(families::generate(families::FamilySpec::star(5)));
  REQUIRE(star.nontrivial.size() == 1);
  CHECK(star.nontrivial[0] == VertexSet(5, {1, 2, 3, 4}));
  CHECK(star.without_twin == VertexSet(5, {0}));

  CHECK(false_twin_classes(path(4)).nontrivial.empty());

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = oracle::random_graph(12, 0.25, seed);
    const auto p = false_twin_classes(g);
    std::size_t covered = 0;
    for (const auto& cls : p.classes) {
      covered += cls.size();
      const Vertex first = cls.front();
      for (Vertex v : cls) CHECK(g.open_neighborhood(v) == g.open_neighborhood(first));
    }
    CHECK(covered == g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        const bool twins = g.open_neighborhood(u) == g.open_neighborhood(v);
        const bool together = std::any_of(p.classes.begin(), p.classes.end(), [&](const VertexSet& c) {
          return c.contains(u) && c.contains(v);
        });
        CHECK(twins == together);
      }
    }
  }
}

TEST_CASE("components, degrees and induced subgraphs", "[graph]") {
  const auto sub = induced_subgraph(cycle(6), VertexSet(6, {0, 1, 2}));
  CHECK(sub.graph == path(3));
  CHECK(sub.to_parent == std::vector<Vertex>{0, 1, 2});
  CHECK(sub.lift(VertexSet(3, {2}), 6) == VertexSet(6, {2}));
  CHECK(sub.restrict(VertexSet(6, {1, 4})) == VertexSet(3, {1}));

  CHECK(max_degree(families::generate(families::FamilySpec::complete_bipartite(3, 3))) == 3);
  const Graph two_edges = from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK(components(two_edges).size() == 2);
  CHECK_FALSE(is_connected(two_edges));
  CHECK(induced_subgraph(two_edges, VertexSet(4)).graph.order() == 0);
  CHECK(degree(two_edges, 3) == 1);
  CHECK_THROWS(degree(two_edges, 4));
  CHECK(is_independent(two_edges, VertexSet(4, {0, 2})));
  CHECK_FALSE(is_independent(two_edges, VertexSet(4, {0, 1})));
}
