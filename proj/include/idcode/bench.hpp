#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "idcode/construct.hpp"
#include "idcode/families.hpp"
#include "idcode/graph.hpp"

// Bound-checking harness over family and seeded random instances.
namespace idcode::bench {

struct Instance {
  std::string id;
  std::string family;  // grouping key for the summary
  Graph graph;
  std::optional<std::size_t> known_gamma_id;
};

struct RunRecord {
  std::string input_id;
  std::size_t n = 0;
  std::size_t delta = 0;
  std::string variant;
  std::string case_taken;                // empty when the construction did not run
  std::optional<std::size_t> code_size;  // absent when the construction did not run
  std::optional<double> bound_value;
  std::optional<std::size_t> exact_size;
  std::optional<double> wall_time_ms;  // only recorded with Options::timings
  // "ok", "precondition: <reason>" or "violation: <reason>".
  std::string status;
};

struct Options {
  bool all_variants = true;  // also run bipartite / nofalsetwins where they apply
  std::size_t exact_limit = 16;
  bool timings = false;
};

// Fixed deterministic corpus: stars, K_{a,b}, complete trees, twice
// subdivided cliques, short paths and cycles, and a few seeded random
// bipartite, triangle-free and planted-twin graphs.
std::vector<Instance> family_suite();

// `count` random triangle-free graphs (largest component of
// random_triangle_free(n, m, s_i)), instance seeds drawn from `seed`.
std::vector<Instance> random_suite(std::size_t n, std::size_t m, std::size_t count, std::uint64_t seed);

Instance make_instance(const families::FamilySpec& spec);

// One record per instance and variant, in input order. Failures are
// recorded in `status`; the run always continues.
std::vector<RunRecord> run(const std::vector<Instance>& instances, const Options& options);

struct SummaryRow {
  std::string family;
  std::string bound;  // "triangle-free", "bipartite", "no-false-twins", "girth5-mindeg2", "girth5-mindeg"
  std::size_t instances = 0;
  std::size_t violations = 0;
  bool external = false;       // reference value only, never checked
  std::optional<double> worst_slack;  // min over constructed codes of bound - code_size
  std::string reference;       // formula of the bound
};

std::vector<SummaryRow> summarize(const std::vector<Instance>& instances,
                                  const std::vector<RunRecord>& records);

// CSV columns follow the RunRecord field order.
void write_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_json(std::ostream& out, const std::vector<RunRecord>& records,
                const std::vector<SummaryRow>& summary);
void write_text(std::ostream& out, const std::vector<RunRecord>& records,
                const std::vector<SummaryRow>& summary);

// Length of a shortest cycle, absent for forests.
std::optional<std::size_t> girth(const Graph& g);

}  // namespace idcode::bench
