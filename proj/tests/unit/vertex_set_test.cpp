#include <catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>

#include "idcode/vertex_set.hpp"

using idcode::Vertex;
using idcode::VertexSet;

TEST_CASE("vertex set basic membership", "[vertex_set]") {
  VertexSet s(130, {0, 5, 64, 129});
  CHECK(s.size() == 4);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(63));
  CHECK_FALSE(s.contains(500));
  s.erase(64);
  CHECK_FALSE(s.contains(64));
  CHECK(s.to_vector() == std::vector<Vertex>{0, 5, 129});
  CHECK_THROWS_AS(s.insert(130), std::out_of_range);
  s.clear();
  CHECK(s.empty());
  CHECK(s.front() == s.universe());
}

TEST_CASE("vertex set algebra matches std::set", "[vertex_set]") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng() % 200;
    VertexSet a(n), b(n);
    std::set<Vertex> sa, sb;
    for (std::size_t i = 0; i < n / 2; ++i) {
      const Vertex x = rng() % n, y = rng() % n;
      a.insert(x), sa.insert(x);
      b.insert(y), sb.insert(y);
    }
    std::set<Vertex> uni = sa, inter, diff, sym;
    uni.insert(sb.begin(), sb.end());
    for (Vertex v = 0; v < n; ++v) {
      const bool in_a = sa.count(v) != 0, in_b = sb.count(v) != 0;
      if (in_a && in_b) inter.insert(v);
      if (in_a && !in_b) diff.insert(v);
      if (in_a != in_b) sym.insert(v);
    }
    auto as_set = [](const VertexSet& s) {
      std::set<Vertex> out;
      for (Vertex v : s) out.insert(v);
      return out;
    };
    CHECK(as_set(a | b) == uni);
    CHECK(as_set(a & b) == inter);
    CHECK(as_set(a - b) == diff);
    CHECK(as_set(a ^ b) == sym);
    CHECK(a.intersection_size(b) == inter.size());
    CHECK(a.intersects(b) == !inter.empty());
    CHECK((a & b).is_subset_of(a));
    CHECK(a.complement().size() == n - a.size());
    CHECK((a | a.complement()) == VertexSet::full(n));
  }
}

TEST_CASE("vertex sets over different universes do not mix", "[vertex_set]") {
  VertexSet a(10), b(11);
  CHECK_THROWS_AS(a | b, std::invalid_argument);
}

TEST_CASE("vertex set ordering and printing", "[vertex_set]") {
  const VertexSet a(8, {1, 2});
  const VertexSet b(8, {1, 2});
  const VertexSet c(8, {3});
  CHECK(a == b);
  CHECK(a != c);
  CHECK((a < c) != (c < a));
  std::ostringstream os;
  os << a;
  CHECK(os.str() == "{1,2}");
}
