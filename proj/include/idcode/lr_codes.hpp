#pragma once

#include <cstddef>

#include "idcode/graph.hpp"
#include "idcode/strong_matching.hpp"

// Strong induced matchings around an independent set, and the
// quasi-identifying codes built on L(M) ∪ R(M).
namespace idcode::lr {

struct QuasiCode {
  VertexSet code;      // C ⊆ L ∪ R
  VertexSet leftover;  // (L ∪ R) \ C
};

// All edges uv with deg(u), deg(v) >= 2 and (N(u) ∪ N(v)) \ {u,v} ⊆ S.
// Throws PreconditionError when S is not independent or G has a triangle.
StrongMatching extract_strong_matching(const Graph& g, const VertexSet& s);

// Orientation construction on the degree-2 part (L1, R1) of `sm`: contract
// every path l1 r1 r2 l2 into an arc, sweep each spanning tree bottom-up to
// get rid of in-degree-1 vertices, then repair in-degree-1 roots.
// Guarantees |C| <= |L1| + |R1|/2, no C-isolated vertex of R1 and at least
// half of L1 inside C. Throws PreconditionError(degree_not_two) if some
// vertex of sm.r1 does not have degree 2.
QuasiCode quasi_code_deg2(const Graph& g, const StrongMatching& sm);

struct QuasiLedger {
  std::size_t l1 = 0, r1 = 0, l2 = 0, r2 = 0;
  std::size_t deg2_size = 0;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  bool chose_a = true;
  std::size_t leftover = 0;
  std::size_t l = 0;
};

// Builds both candidate codes C_a (L2-heavy) and C_b (R2-heavy) on top of
// the degree-2 code, certifies each and returns the smaller one (C_a on
// ties). The result satisfies |(L ∪ R) \ C| >= |L|/3 and has no C-isolated
// vertex.
QuasiCode quasi_code_general(const Graph& g, const StrongMatching& sm, QuasiLedger* ledger = nullptr);

}  // namespace idcode::lr
