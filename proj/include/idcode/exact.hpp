#pragma once

#include <cstddef>
#include <cstdint>

#include "idcode/graph.hpp"

// Exhaustive minimum identifying code search for small graphs.
namespace idcode::exact {

inline constexpr std::size_t kDefaultVertexLimit = 16;
// Candidate sets are packed into one machine word.
inline constexpr std::size_t kHardVertexLimit = 64;

struct ExactResult {
  std::size_t size = 0;
  VertexSet witness;
  // Search nodes (pruned solver) or candidate subsets (naive solver) visited.
  std::uint64_t explored = 0;
};

// max(ceil(log2(n+1)), ceil(2n/(delta+2))).
std::size_t lower_bound(std::size_t n, std::size_t delta);

// Iterative deepening over the size k, starting at lower_bound. Each level is
// a hitting-set search over the closed balls (domination) and the symmetric
// differences B(u) ⊕ B(v) (separation): branch on the elements of an unhit
// set with fewest remaining candidates, cut when the budget runs out.
ExactResult min_identifying_code(const Graph& g, std::size_t vertex_limit = kDefaultVertexLimit);

// Enumerates every k-subset for k = 0, 1, ... and tests it directly. Shares
// nothing with the pruned solver beyond the graph type.
ExactResult min_identifying_code_naive(const Graph& g, std::size_t vertex_limit = 20);

}  // namespace idcode::exact
