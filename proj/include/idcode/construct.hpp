#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idcode/graph.hpp"
#include "idcode/indep.hpp"
#include "idcode/lr_codes.hpp"
#include "idcode/numeric.hpp"

// The top-level construction of identifying codes in triangle-free graphs
// and its variants.
namespace idcode::construct {

enum class CaseTaken { case1_matching, case2_false_twins };
std::string_view to_string(CaseTaken c);

enum class VariantKind { main, generalized, no_false_twins, bipartite, chromatic };

struct Variant {
  VariantKind kind = VariantKind::main;
  std::size_t colours = 0;    // chromatic only
  std::string provider_name;  // generalized only

  static Variant main() { return {}; }
  static Variant bipartite() { return {VariantKind::bipartite, 2, {}}; }
  static Variant chromatic(std::size_t k) { return {VariantKind::chromatic, k, {}}; }
  static Variant no_false_twins() { return {VariantKind::no_false_twins, 0, {}}; }

  // "main", "bipartite", "chromatic:k", "nofalsetwins" or "generalized:<name>".
  std::string label() const;
  // Inverse of label() for the first four forms.
  static std::optional<Variant> parse(std::string_view text);
};

struct PhaseTiming {
  std::string phase;
  double ms = 0.0;
};

// Intermediate sets of a Case-1 run.
struct Case1Details {
  VertexSet y;         // vertices without a false twin (the whole of V for no_false_twins)
  VertexSet s;         // good independent set inside y
  VertexSet l;         // L(M) ⊆ s
  VertexSet r;         // R(M)
  VertexSet c1;        // quasi-identifying code on L ∪ R
  VertexSet c2;        // (V \ (L ∪ R)) \ s
  VertexSet leftover;  // L' = (L ∪ R) \ c1
  std::size_t matching_edges = 0;
  lr::QuasiLedger ledger;
};

struct ConstructionReport {
  VertexSet code;
  CaseTaken case_taken = CaseTaken::case1_matching;
  Variant variant;
  std::size_t n = 0;
  std::size_t delta = 0;
  Quantity fraction;   // f'(Δ)
  Quantity threshold;  // Case 1 runs when |Y| >= threshold
  Quantity bound;      // bound the code is checked against
  std::size_t y_size = 0;
  std::size_t false_twin_classes = 0;  // |F|, number of nontrivial classes
  bool threshold_ambiguous = false;
  bool certified = false;
  std::vector<PhaseTiming> timings;
  std::vector<std::string> notes;
  std::optional<Case1Details> case1;
};

// n - n/(Δ + 3/f').
Quantity theorem_bound(std::size_t n, std::size_t delta, const Quantity& f_prime);
// n - n·(ln Δ - 1)/(3Δ), the bound without false twins.
Quantity no_false_twins_bound(std::size_t n, std::size_t delta);

// Main construction with f'(Δ) = (ln Δ - 1)/Δ.
// Throws PreconditionError unless g is connected, identifiable,
// triangle-free and has Δ >= 3.
ConstructionReport build_identifying_code(const Graph& g);

// Same pipeline with the provider's fraction and independent-set routine.
// A chromatic provider whose colouring of G fails falls back to the main
// construction and says so in `notes`.
ConstructionReport build_with_fraction(const Graph& g, const indep::FractionProvider& provider);

// Case 1 with Y = V. Throws PreconditionError(false_twins_present) if some
// pair of false twins exists.
ConstructionReport build_no_false_twins(const Graph& g);

ConstructionReport build(const Graph& g, const Variant& variant);

// V minus the lowest-id vertex of every nontrivial false-twin class (for P3,
// the two leaves). Throws PreconditionError on C4 or on disconnected,
// non-identifiable or triangle-containing input.
VertexSet case2_false_twin_code(const Graph& g, const FalseTwinPartition& p);

}  // namespace idcode::construct
