#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "idcode/graph.hpp"

// Deterministic and seeded random triangle-free graph families, with the
// known γ^ID values used as regression targets.
namespace idcode::families {

enum class Kind {
  path,
  cycle,
  star,
  complete_bipartite,
  kary_tree,
  subdivided_complete,
  random_bipartite,
  random_triangle_free,
  planted_false_twins,
};

struct FamilySpec {
  Kind kind = Kind::path;
  std::size_t a = 0;  // n, arity or first side, depending on kind
  std::size_t b = 0;  // height, second side or edge target
  double p = 0.0;     // edge probability (random_bipartite)
  std::uint64_t seed = 0;
  std::size_t classes = 0;     // planted_false_twins: number of planted classes
  std::size_t class_size = 0;  // planted_false_twins: size of each planted class

  static FamilySpec path(std::size_t n) { return {Kind::path, n}; }
  static FamilySpec cycle(std::size_t n) { return {Kind::cycle, n}; }
  // K_{1,n-1}: centre 0 and n-1 leaves.
  static FamilySpec star(std::size_t n) { return {Kind::star, n}; }
  static FamilySpec complete_bipartite(std::size_t a, std::size_t b) {
    return {Kind::complete_bipartite, a, b};
  }
  // Root with `arity` children, every internal vertex with `arity` children,
  // leaves at depth `height`; Δ = arity + 1 once height >= 2.
  static FamilySpec kary_tree(std::size_t arity, std::size_t height) {
    return {Kind::kary_tree, arity, height};
  }
  // K_k with every edge replaced by a path on two new inner vertices.
  static FamilySpec subdivided_complete(std::size_t k) { return {Kind::subdivided_complete, k}; }
  static FamilySpec random_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed) {
    return {Kind::random_bipartite, a, b, p, seed};
  }
  static FamilySpec random_triangle_free(std::size_t n, std::size_t m, std::uint64_t seed) {
    return {Kind::random_triangle_free, n, m, 0.0, seed};
  }
  // A random_triangle_free(n, m, seed) base graph plus `classes` base
  // vertices each cloned into a false-twin class of `class_size` vertices.
  static FamilySpec planted_false_twins(std::size_t n, std::size_t m, std::size_t classes,
                                        std::size_t class_size, std::uint64_t seed) {
    return {Kind::planted_false_twins, n, m, 0.0, seed, classes, class_size};
  }

  // Short stable identifier, e.g. "cycle_7", "tree_2_3", "kbip_3_3".
  std::string name() const;
};

// Throws PreconditionError(invalid_family) on sizes outside the family's
// definition or p outside [0, 1].
Graph generate(const FamilySpec& spec);

// γ^ID for odd cycles of order >= 7, complete trees of height >= 2 and
// arity >= 2, K_{a,a} with a >= 3, and stars with at least two leaves.
// Absent for every other spec.
std::optional<std::size_t> known_gamma_id(const FamilySpec& spec);

// The component with the most vertices (lowest smallest vertex on ties).
InducedSubgraph largest_component(const Graph& g);

// Portable seeded sampling on top of the raw 64-bit engine output, so
// streams do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1).
  double unit();

 private:
  std::mt19937_64 engine_;
};

}  // namespace idcode::families
