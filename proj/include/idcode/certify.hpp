#pragma once

#include <span>
#include <vector>

#include "idcode/graph.hpp"
#include "idcode/strong_matching.hpp"

// Checkers for the definitional properties. Every construction in the
// library runs its output through these before returning it.
namespace idcode::certify {

struct SeparationFailure {
  enum class Reason { undominated, unseparated };

  Vertex u;
  Vertex v;  // equals u for undominated
  Reason reason;

  bool operator==(const SeparationFailure&) const = default;
};

// Every u in `targets` has B(u) ∩ code nonempty.
bool is_dominating(const Graph& g, const VertexSet& code, const VertexSet& targets);

// All undominated vertices, then all pairs with equal traces B(.) ∩ code
// (u < v, ordered by u then v). Empty iff `code` is an identifying code.
std::vector<SeparationFailure> identifying_failures(const Graph& g, const VertexSet& code);

bool is_identifying_code(const Graph& g, const VertexSet& code);

// `code` is an identifying code of G[subset]. Throws if code ⊄ subset.
bool is_s_identifying(const Graph& g, const VertexSet& subset, const VertexSet& code);

// Vertices x of s with no neighbour in s.
VertexSet s_isolated_vertices(const Graph& g, const VertexSet& s);

// M is an induced matching, L(M) is independent and every R(M)-vertex has a
// neighbour in L(M).
bool is_strong_induced_matching(const Graph& g, std::span<const Edge> matching);

// The three quasi-identifying conditions, evaluated in G' = G[L ∪ R].
// Throws if code ⊄ L ∪ R.
bool is_quasi_identifying(const Graph& g, const StrongMatching& sm, const VertexSet& code);

struct ComplementConditions {
  bool no_isolated_vertex = false;        // S holds no isolated vertex of G
  bool no_false_twins = false;            // no two members of S share N(.)
  bool degree_one_escape = false;         // each degree-1 vertex has a distance-2 vertex outside S
  bool complement_without_isolated_edge = false;  // G[V \ S] has no isolated edge

  bool all() const {
    return no_isolated_vertex && no_false_twins && degree_one_escape &&
           complement_without_isolated_edge;
  }
  explicit operator bool() const { return all(); }
};

// Checks the four conditions under which V \ S is an identifying code of a
// triangle-free identifiable graph. When they all hold, the identifying
// property of V \ S is verified as well (InvariantViolation otherwise).
// Throws PreconditionError when S is not independent.
ComplementConditions check_complement_code_conditions(const Graph& g, const VertexSet& s);

}  // namespace idcode::certify
