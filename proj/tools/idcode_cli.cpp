#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "idcode/bench.hpp"
#include "idcode/certify.hpp"
#include "idcode/construct.hpp"
#include "idcode/errors.hpp"
#include "idcode/exact.hpp"
#include "idcode/families.hpp"
#include "idcode/io.hpp"

namespace {

using namespace idcode;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kParse = 2;
constexpr int kPrecondition = 3;

// Reading errors all count as parse errors, including loops and ids that do
// not fit the announced vertex count.
Graph load(const std::string& path) {
  try {
    return io::read_graph_file(path);
  } catch (const PreconditionError& e) {
    throw io::ParseError(0, e.what());
  }
}

std::string join(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

int cmd_construct(const std::string& path, const std::string& variant_text, bool json, bool timings) {
  const auto variant = construct::Variant::parse(variant_text);
  if (!variant) {
    std::cerr << "unknown variant '" << variant_text << "' (main|bipartite|chromatic:k|nofalsetwins)\n";
    return kParse;
  }
  const Graph g = load(path);
  const auto start = std::chrono::steady_clock::now();
  const auto report = construct::build(g, *variant);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (json) {
    nlohmann::ordered_json j;
    j["input_id"] = path;
    j["n"] = report.n;
    j["delta"] = report.delta;
    j["variant"] = report.variant.label();
    j["case_taken"] = std::string(construct::to_string(report.case_taken));
    j["code_size"] = report.code.size();
    j["bound_value"] = report.bound.approx();
    j["exact_size"] = nullptr;
    j["wall_time_ms"] = timings ? nlohmann::ordered_json(ms) : nlohmann::ordered_json(nullptr);
    j["status"] = report.certified ? "ok" : "uncertified";
    j["code"] = report.code.to_vector();
    j["notes"] = report.notes;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "code: " << join(report.code) << '\n'
              << "size: " << report.code.size() << '\n'
              << "bound: " << report.bound.str() << '\n'
              << "case: " << construct::to_string(report.case_taken) << '\n'
              << "variant: " << report.variant.label() << '\n';
    for (const auto& note : report.notes) std::cout << "note: " << note << '\n';
    if (timings) {
      for (const auto& t : report.timings) std::cout << "time " << t.phase << ": " << t.ms << " ms\n";
    }
  }
  return kOk;
}

int cmd_verify(const std::string& path, const std::vector<std::size_t>& ids) {
  const Graph g = load(path);
  VertexSet code(g.order());
  for (std::size_t id : ids) {
    if (id >= g.order()) {
      throw PreconditionError(Precondition::vertex_out_of_range,
                              std::to_string(id) + " >= n=" + std::to_string(g.order()));
    }
    code.insert(id);
  }
  const auto failures = certify::identifying_failures(g, code);
  if (failures.empty()) {
    std::cout << "OK\n";
    return kOk;
  }
  std::cout << "FAIL\n";
  for (const auto& f : failures) {
    if (f.reason == certify::SeparationFailure::Reason::undominated) {
      std::cout << "undominated " << f.u << '\n';
    } else {
      std::cout << "unseparated " << f.u << ' ' << f.v << '\n';
    }
  }
  return kFailed;
}

int cmd_exact(const std::string& path, std::size_t limit) {
  const Graph g = load(path);
  const auto result = exact::min_identifying_code(g, limit);
  std::cout << "gamma_id: " << result.size << '\n' << "witness: " << join(result.witness) << '\n';
  return kOk;
}

int cmd_bench(bool families, const std::vector<std::uint64_t>& random, bool csv, bool json,
              bool timings, std::size_t exact_limit) {
  std::vector<bench::Instance> instances;
  std::vector<bench::RunRecord> records;
  bench::Options options;
  options.timings = timings;
  options.exact_limit = exact_limit;
  if (families || random.empty()) {
    auto suite = bench::family_suite();
    auto rows = bench::run(suite, options);
    instances.insert(instances.end(), suite.begin(), suite.end());
    records.insert(records.end(), rows.begin(), rows.end());
  }
  if (!random.empty()) {
    auto suite = bench::random_suite(random[0], random[1], random[2], random[3]);
    options.all_variants = false;
    auto rows = bench::run(suite, options);
    instances.insert(instances.end(), suite.begin(), suite.end());
    records.insert(records.end(), rows.begin(), rows.end());
  }
  const auto summary = bench::summarize(instances, records);
  if (csv) {
    bench::write_csv(std::cout, records);
  } else if (json) {
    bench::write_json(std::cout, records, summary);
  } else {
    bench::write_text(std::cout, records, summary);
  }
  return kOk;
}

int cmd_generate(const std::string& kind, const std::vector<double>& params) {
  using families::FamilySpec;
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw PreconditionError(Precondition::invalid_family,
                              kind + " takes " + std::to_string(count) + " parameters");
    }
  };
  auto at = [&](std::size_t i) { return static_cast<std::size_t>(params[i]); };
  FamilySpec spec;
  if (kind == "path") {
    need(1);
    spec = FamilySpec::path(at(0));
  } else if (kind == "cycle") {
    need(1);
    spec = FamilySpec::cycle(at(0));
  } else if (kind == "star") {
    need(1);
    spec = FamilySpec::star(at(0));
  } else if (kind == "kbip") {
    need(2);
    spec = FamilySpec::complete_bipartite(at(0), at(1));
  } else if (kind == "tree") {
    need(2);
    spec = FamilySpec::kary_tree(at(0), at(1));
  } else if (kind == "subdiv") {
    need(1);
    spec = FamilySpec::subdivided_complete(at(0));
  } else if (kind == "randbip") {
    need(4);
    spec = FamilySpec::random_bipartite(at(0), at(1), params[2], at(3));
  } else if (kind == "randtf") {
    need(3);
    spec = FamilySpec::random_triangle_free(at(0), at(1), at(2));
  } else {
    std::cerr << "unknown family '" << kind << "' (path|cycle|star|kbip|tree|subdiv|randbip|randtf)\n";
    return kParse;
  }
  io::write_edge_list(std::cout, families::generate(spec));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identifying codes in triangle-free graphs"};
  app.require_subcommand(1);

  std::string path, variant = "main";
  bool json = false, csv = false, timings = false, families = false;
  std::vector<std::size_t> ids;
  std::size_t limit = exact::kDefaultVertexLimit;
  std::vector<std::uint64_t> random;
  std::string kind;
  std::vector<double> params;

  auto* construct_cmd = app.add_subcommand("construct", "build a certified identifying code");
  construct_cmd->add_option("graph", path, "edge-list or DIMACS file")->required();
  construct_cmd->add_option("--variant", variant, "main | bipartite | chromatic:k | nofalsetwins");
  construct_cmd->add_flag("--json", json, "print a JSON record");
  construct_cmd->add_flag("--timings", timings, "include wall-clock timings");

  auto* verify_cmd = app.add_subcommand("verify", "check whether a vertex set is an identifying code");
  verify_cmd->add_option("graph", path, "edge-list or DIMACS file")->required();
  verify_cmd->add_option("ids", ids, "code vertices (0-based)");

  auto* exact_cmd = app.add_subcommand("exact", "compute the minimum identifying code size");
  exact_cmd->add_option("graph", path, "edge-list or DIMACS file")->required();
  exact_cmd->add_option("--limit", limit, "largest accepted vertex count (at most 64)");

  auto* bench_cmd = app.add_subcommand("bench", "run the bound-checking suites");
  bench_cmd->add_flag("--families", families, "run the fixed family suite (default)");
  bench_cmd->add_option("--random", random, "n m count seed: seeded random triangle-free suite")
      ->expected(4);
  bench_cmd->add_flag("--csv", csv, "print records as CSV");
  bench_cmd->add_flag("--json", json, "print records and summary as JSON");
  bench_cmd->add_flag("--timings", timings, "record wall-clock time per run");
  bench_cmd->add_option("--exact-limit", limit, "solve instances up to this size exactly");

  auto* generate_cmd = app.add_subcommand("generate", "write a family graph as an edge list");
  generate_cmd->add_option("family", kind, "path|cycle|star|kbip|tree|subdiv|randbip|randtf")->required();
  generate_cmd->add_option("params", params, "family parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*construct_cmd) return cmd_construct(path, variant, json, timings);
    if (*verify_cmd) return cmd_verify(path, ids);
    if (*exact_cmd) return cmd_exact(path, limit);
    if (*bench_cmd) return cmd_bench(families, random, csv, json, timings, limit);
    if (*generate_cmd) return cmd_generate(kind, params);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InvariantViolation& e) {
    std::cerr << "certification failed: " << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}
