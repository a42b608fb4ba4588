#pragma once

#include <vector>

#include "idcode/graph.hpp"

namespace idcode {

// An induced matching M together with R = V(M), L = N(R) \ R and the split
// used by the quasi-code constructions:
//   r1 : vertices of R whose M-edge has both endpoints of degree exactly 2
//   l1 : N(r1) ∩ L
//   r2 : R \ r1
//   l2 : L \ l1
struct StrongMatching {
  std::vector<Edge> edges;
  VertexSet r;
  VertexSet l;
  VertexSet r1;
  VertexSet r2;
  VertexSet l1;
  VertexSet l2;

  // The partner of v in M (v must belong to r).
  Vertex partner(Vertex v) const;

  // Derives r, l and the split from `edges` (no validation).
  static StrongMatching from_edges(const Graph& g, std::vector<Edge> edges);
};

}  // namespace idcode
