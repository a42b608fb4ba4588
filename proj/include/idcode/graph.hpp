#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "idcode/numeric.hpp"
#include "idcode/vertex_set.hpp"

namespace idcode {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1. Each vertex keeps its
// open neighbourhood both as a sorted list (for iteration) and as a bit row
// (for set algebra).
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(Vertex v) const { return lists_.at(v).size(); }
  std::size_t max_degree() const { return max_degree_; }
  // 2m/n as an exact fraction; zero for the empty graph.
  Rational average_degree() const;

  std::span<const Vertex> neighbors(Vertex v) const { return lists_.at(v); }
  const VertexSet& open_neighborhood(Vertex v) const { return rows_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const { return lists_ == other.lists_; }

 private:
  friend struct GraphBuilder;

  std::vector<std::vector<Vertex>> lists_;
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
  std::size_t max_degree_ = 0;
};

struct EdgeListStats {
  std::size_t duplicates_dropped = 0;
};

// Throws PreconditionError on loops and out-of-range ids. Repeated edges (in
// either orientation) are collapsed and counted in `stats`.
Graph from_edge_list(std::size_t n, std::span<const Edge> edges, EdgeListStats* stats = nullptr);
Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges);

// The equivalence classes of the false-twin relation N(u) = N(v), u !~ v.
struct FalseTwinPartition {
  std::vector<VertexSet> classes;
  // Classes with at least two members, in order of their smallest vertex.
  std::vector<VertexSet> nontrivial;
  // Union of the nontrivial classes.
  VertexSet with_twin;
  // Complement of with_twin.
  VertexSet without_twin;
};

struct InducedSubgraph {
  Graph graph;
  // to_parent[i] is the id in the parent graph of vertex i of `graph`.
  std::vector<Vertex> to_parent;

  VertexSet lift(const VertexSet& local, std::size_t parent_order) const;
  VertexSet restrict(const VertexSet& parent) const;
};

VertexSet closed_ball(const Graph& g, Vertex v);
std::size_t degree(const Graph& g, Vertex v);
std::size_t max_degree(const Graph& g);

bool is_triangle_free(const Graph& g);
std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);

bool is_identifiable(const Graph& g);
// Some pair u != v with B(u) = B(v), if the graph has one.
std::optional<Edge> find_twins(const Graph& g);

FalseTwinPartition false_twin_classes(const Graph& g);

// Connected components in order of their smallest vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace idcode
