#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "idcode/graph.hpp"
#include "idcode/numeric.hpp"

// Independent-set constructions for triangle-free graphs.
namespace idcode::indep {

// Supplies a guaranteed independence ratio f(Δ) for every subgraph of the
// input, plus the routine that achieves it on an induced subgraph.
class FractionProvider {
 public:
  enum class Kind { shearer, chromatic, custom };

  using FractionFn = std::function<Quantity(std::size_t delta)>;
  // Must return an independent subset of `subset` of size >= f(Δ)·|subset|.
  using SetFn = std::function<VertexSet(const Graph& g, const VertexSet& subset)>;

  // f(Δ) = (ln Δ - 1)/Δ, realised by shearer_independent_set.
  static FractionProvider shearer();
  // f(Δ) = 1/k, realised by a largest colour class of a k-colouring.
  static FractionProvider chromatic(std::size_t k);
  static FractionProvider custom(std::string name, FractionFn fraction, SetFn independent_set);

  Kind kind() const { return kind_; }
  std::size_t colours() const { return colours_; }
  const std::string& name() const { return name_; }

  Quantity fraction(std::size_t delta) const;
  // f'(Δ) = min{1/3, f(Δ)}. Throws PreconditionError unless f'(Δ) > 0.
  Quantity guaranteed_fraction(std::size_t delta) const;

  VertexSet independent_set(const Graph& g, const VertexSet& subset) const;

 private:
  Kind kind_ = Kind::shearer;
  std::size_t colours_ = 0;
  std::string name_;
  FractionFn fraction_;
  SetFn set_;
};

// Greedy derandomisation of Shearer's argument: repeatedly take the vertex v
// maximising Φ(H − B(v)), Φ(H) = f(d̄(H))·|V(H)|, and delete B(v). The result
// is checked against |S| >= f(d̄)·n before it is returned.
// Throws PreconditionError on a triangle.
VertexSet shearer_independent_set(const Graph& g);

// Proper colouring with at most k colours: exact bipartition for k = 2,
// greedy (descending degree, then smallest-last) for k >= 3.
std::optional<std::vector<std::size_t>> colour(const Graph& g, std::size_t k);

// Largest colour class (per-component larger side when k = 2).
// Throws PreconditionError(colouring_failed) when no k-colouring was found.
VertexSet chromatic_independent_set(const Graph& g, std::size_t k);
// Largest class of a k-colouring of G restricted to `subset`.
VertexSet chromatic_independent_set(const Graph& g, std::size_t k, const VertexSet& subset);

struct GoodSetParts {
  VertexSet s1;  // degree-1 vertices of Y
  VertexSet t1;  // s1, their neighbours, and one distance-2 vertex each
  VertexSet y1;  // t1 ∩ Y
  VertexSet y2;  // Y \ y1
  VertexSet s2;  // provider's independent set inside G[y2]
  VertexSet s;   // s1 ∪ s2
};

// Independent set S ⊆ Y such that every degree-1 vertex of G keeps a
// distance-2 vertex outside S and |S| >= f'(Δ)·|Y|. Y must avoid every
// vertex that has a false twin.
GoodSetParts good_independent_set_parts(const Graph& g, const VertexSet& y,
                                        const FractionProvider& provider = FractionProvider::shearer());
VertexSet good_independent_set(const Graph& g, const VertexSet& y,
                               const FractionProvider& provider = FractionProvider::shearer());

}  // namespace idcode::indep
