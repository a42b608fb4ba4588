#include "idcode/strong_matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace idcode {

Vertex StrongMatching::partner(Vertex v) const {
  for (const auto& [a, b] : edges) {
    if (a == v) return b;
    if (b == v) return a;
  }
  throw std::out_of_range("vertex is not matched");
}

StrongMatching StrongMatching::from_edges(const Graph& g, std::vector<Edge> edges) {
  const std::size_t n = g.order();
  StrongMatching sm;
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  sm.edges = std::move(edges);
  sm.r = VertexSet(n);
  sm.r1 = VertexSet(n);
  sm.l = VertexSet(n);
  sm.l1 = VertexSet(n);
  for (const auto& [a, b] : sm.edges) {
    sm.r.insert(a);
    sm.r.insert(b);
    if (g.degree(a) == 2 && g.degree(b) == 2) {
      sm.r1.insert(a);
      sm.r1.insert(b);
    }
  }
  for (Vertex x : sm.r) sm.l |= g.open_neighborhood(x);
  sm.l -= sm.r;
  for (Vertex x : sm.r1) sm.l1 |= g.open_neighborhood(x);
  sm.l1 &= sm.l;
  sm.r2 = sm.r - sm.r1;
  sm.l2 = sm.l - sm.l1;
  return sm;
}

}  // namespace idcode
