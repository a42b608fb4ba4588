#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "idcode/graph.hpp"

// Deliberately naive reference implementations, written straight from the
// definitions, used to cross-check the library.
namespace oracle {

using idcode::Graph;
using idcode::Vertex;
using idcode::VertexSet;

std::vector<std::vector<bool>> adjacency_matrix(const Graph& g);

bool has_triangle(const Graph& g);

std::set<Vertex> ball(const Graph& g, Vertex v);

// Every vertex has a nonempty trace and all traces differ.
bool is_identifying(const Graph& g, const std::vector<Vertex>& code);
bool is_identifying(const Graph& g, const VertexSet& code);

// Some pair of distinct vertices with equal closed balls.
bool has_twins(const Graph& g);

// Exhaustive minimum over all subsets in increasing size; n <= 14.
std::size_t min_identifying_code(const Graph& g);

// Exhaustive maximum independent set size; n <= 22.
std::size_t max_independent_set(const Graph& g);

// (d(ln d - 1) + 1)/(d - 1)^2 in plain double arithmetic, d != 1.
double shearer_ratio(double d);

// max(⌈log2(n+1)⌉, ⌈2n/(Δ+2)⌉) computed with floating point.
std::size_t lower_bound(std::size_t n, std::size_t delta);

// G(n, p) with a fixed seed; may contain triangles.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

// Connected triangle-free graph: largest component of a seeded random
// triangle-free graph on n vertices with about m edges.
Graph connected_triangle_free(std::size_t n, std::size_t m, std::uint64_t seed);

// Connected random bipartite graph with sides a and b.
Graph connected_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed);

}  // namespace oracle

namespace oracle {

// Vertices arrive one by one, each joined to up to `d` random earlier
// vertices that are pairwise non-adjacent: a d-degenerate triangle-free
// graph (connected when d >= 1).
Graph degenerate_triangle_free(std::size_t n, std::size_t d, std::uint64_t seed);

}  // namespace oracle

namespace oracle {

// `copies` disjoint 7-vertex gadgets l1, l2, m, a, b, c, d with edges ab,
// l1-a, b-l2, cd, c-l1, c-m, d-l2 and matching {ab, cd}, so that
// |L1| = |R1| = |R2| = 2|L2|. Quasi codes on it leave exactly a third of L
// uncovered.
std::pair<Graph, std::vector<idcode::Edge>> tight_quasi_instance(std::size_t copies);

}  // namespace oracle
