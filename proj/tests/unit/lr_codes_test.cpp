#include <catch_amalgamated.hpp>

#include "idcode/certify.hpp"
#include "idcode/errors.hpp"
#include "idcode/families.hpp"
#include "idcode/indep.hpp"
#include "idcode/lr_codes.hpp"
#include "support/oracles.hpp"

using namespace idcode;
using families::FamilySpec;

namespace {

Graph cycle(std::size_t n) { return families::generate(FamilySpec::cycle(n)); }
Graph path(std::size_t n) { return families::generate(FamilySpec::path(n)); }
}  // namespace

TEST_CASE("strong matching extraction", "[lr]") {
  const auto c6 = lr::extract_strong_matching(cycle(6), VertexSet(6, {0, 3}));
  CHECK(c6.edges == std::vector<Edge>{{1, 2}, {4, 5}});
  CHECK(c6.l == VertexSet(6, {0, 3}));
  CHECK(c6.r1 == c6.r);
  CHECK(c6.r2.empty());

  const auto p6 = lr::extract_strong_matching(path(6), VertexSet(6, {1, 4}));
  CHECK(p6.edges == std::vector<Edge>{{2, 3}});
  CHECK(p6.l == VertexSet(6, {1, 4}));

  CHECK(lr::extract_strong_matching(path(6), VertexSet(6, {0, 5})).edges.empty());
  CHECK_THROWS_AS(lr::extract_strong_matching(path(6), VertexSet(6, {0, 1})), PreconditionError);
}

TEST_CASE("degree-two quasi codes", "[lr]") {
  const Graph c6 = cycle(6);
  const auto sm6 = StrongMatching::from_edges(c6, {{1, 2}, {4, 5}});
  const auto q6 = lr::quasi_code_deg2(c6, sm6);
  CHECK(q6.code.size() == 4);
  CHECK(certify::is_quasi_identifying(c6, sm6, q6.code));
  CHECK(2 * (q6.code & sm6.l1).size() >= sm6.l1.size());

  const Graph p6 = path(6);
  const auto q = lr::quasi_code_deg2(p6, StrongMatching::from_edges(p6, {{2, 3}}));
  CHECK(q.code == VertexSet(6, {2, 3, 4}));
  CHECK(q.leftover == VertexSet(6, {1}));

  CHECK(lr::quasi_code_deg2(p6, StrongMatching::from_edges(p6, {})).code.empty());
}

TEST_CASE("degree-two quasi code rejects other degrees", "[lr]") {
  const Graph g = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  auto sm = StrongMatching::from_edges(g, {{1, 2}});
  sm.r1.insert(1);
  try {
    lr::quasi_code_deg2(g, sm);
    FAIL("expected degree_not_two");
  } catch (const PreconditionError& e) {
    CHECK(e.which() == Precondition::degree_not_two);
  }
}

TEST_CASE("general quasi codes on small graphs", "[lr]") {
  const Graph p6 = path(6);
  const auto q = lr::quasi_code_general(p6, StrongMatching::from_edges(p6, {{2, 3}}));
  CHECK(q.code == VertexSet(6, {2, 3, 4}));
  CHECK(q.leftover == VertexSet(6, {1}));

  const Graph c6 = cycle(6);
  const auto sm6 = StrongMatching::from_edges(c6, {{1, 2}, {4, 5}});
  lr::QuasiLedger ledger;
  const auto q6 = lr::quasi_code_general(c6, sm6, &ledger);
  CHECK(q6.code.size() == lr::quasi_code_deg2(c6, sm6).code.size());
  CHECK(certify::is_quasi_identifying(c6, sm6, q6.code));
  CHECK(3 * q6.leftover.size() >= sm6.l.size());
  CHECK(ledger.r2 == 0);
}

TEST_CASE("tight instance leaves exactly a third of L", "[lr]") {
  for (std::size_t copies : {1, 2, 5}) {
    const auto [g, matching] = oracle::tight_quasi_instance(copies);
    const auto sm = StrongMatching::from_edges(g, matching);
    REQUIRE(certify::is_strong_induced_matching(g, sm.edges));
    REQUIRE(sm.l1.size() == 2 * copies);
    REQUIRE(sm.r1.size() == 2 * copies);
    REQUIRE(sm.r2.size() == 2 * copies);
    REQUIRE(sm.l2.size() == copies);
    lr::QuasiLedger ledger;
    const auto q = lr::quasi_code_general(g, sm, &ledger);
    CHECK(3 * q.leftover.size() == sm.l.size());
    CHECK(certify::is_quasi_identifying(g, sm, q.code));
    CHECK(certify::s_isolated_vertices(g, q.code).empty());
    CHECK(ledger.size_a == 6 * copies);
    CHECK(ledger.size_b == 6 * copies);
    CHECK(ledger.chose_a);
  }
}

TEST_CASE("quasi code ledger on random instances", "[lr]") {
  int with_r2 = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = oracle::connected_triangle_free(25 + seed % 50, 35 + seed % 60, seed);
    if (g.order() < 3 || g.max_degree() < 3) continue;
    const VertexSet s = indep::good_independent_set(g, false_twin_classes(g).without_twin);
    const auto sm = lr::extract_strong_matching(g, s);
    lr::QuasiLedger ledger;
    const auto q = lr::quasi_code_general(g, sm, &ledger);
    CHECK(certify::is_quasi_identifying(g, sm, q.code));
    CHECK(certify::s_isolated_vertices(g, q.code).empty());
    CHECK(q.code.is_subset_of(sm.l | sm.r));
    for (const auto& [a, b] : sm.edges) CHECK((q.code.contains(a) || q.code.contains(b)));
    const std::size_t l1 = sm.l1.size(), r1 = sm.r1.size(), l2 = sm.l2.size(), r2 = sm.r2.size();
    CHECK(2 * ledger.size_a <= 2 * l1 + r1 + 2 * l2 + r2 + std::min(l1, r2));
    CHECK(2 * ledger.size_b <= 2 * l1 + r1 + 3 * r2);
    CHECK(3 * q.leftover.size() >= sm.l.size());
    CHECK(q.code.size() == std::min(ledger.size_a, ledger.size_b));
    if (r2 > 0) ++with_r2;
  }
  CHECK(with_r2 > 0);
}
