#include "idcode/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "idcode/errors.hpp"
#include "idcode/exact.hpp"
#include "idcode/indep.hpp"

namespace idcode::bench {

namespace {

std::string family_of(const std::string& id) { return id.substr(0, id.find('_')); }

bool is_random(families::Kind kind) {
  return kind == families::Kind::random_bipartite || kind == families::Kind::random_triangle_free ||
         kind == families::Kind::planted_false_twins;
}

std::string fixed(double value, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << value;
  return os.str();
}

}  // namespace

Instance make_instance(const families::FamilySpec& spec) {
  Graph g = families::generate(spec);
  std::optional<std::size_t> known;
  if (is_random(spec.kind)) {
    if (!is_connected(g)) g = families::largest_component(g).graph;
  } else {
    known = families::known_gamma_id(spec);
  }
  return {spec.name(), family_of(spec.name()), std::move(g), known};
}

std::vector<Instance> family_suite() {
  using families::FamilySpec;
  const std::vector<FamilySpec> specs = {
      FamilySpec::path(6),
      FamilySpec::cycle(7),
      FamilySpec::cycle(9),
      FamilySpec::star(4),
      FamilySpec::star(5),
      FamilySpec::star(6),
      FamilySpec::star(8),
      FamilySpec::complete_bipartite(3, 3),
      FamilySpec::complete_bipartite(4, 4),
      FamilySpec::complete_bipartite(3, 5),
      FamilySpec::complete_bipartite(5, 5),
      FamilySpec::kary_tree(2, 2),
      FamilySpec::kary_tree(2, 3),
      FamilySpec::kary_tree(3, 2),
      FamilySpec::kary_tree(2, 4),
      FamilySpec::kary_tree(3, 3),
      FamilySpec::subdivided_complete(4),
      FamilySpec::subdivided_complete(5),
      FamilySpec::subdivided_complete(6),
      FamilySpec::random_bipartite(20, 20, 0.15, 1),
      FamilySpec::random_bipartite(30, 30, 0.1, 2),
      FamilySpec::random_triangle_free(40, 80, 3),
      FamilySpec::random_triangle_free(60, 150, 4),
      FamilySpec::planted_false_twins(30, 60, 3, 3, 5),
  };
  std::vector<Instance> out;
  for (const auto& spec : specs) out.push_back(make_instance(spec));
  return out;
}

std::vector<Instance> random_suite(std::size_t n, std::size_t m, std::size_t count, std::uint64_t seed) {
  families::Rng rng(seed);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(make_instance(families::FamilySpec::random_triangle_free(n, m, rng.next())));
  }
  return out;
}

namespace {

RunRecord run_variant(const Instance& inst, const construct::Variant& variant,
                      const std::optional<std::size_t>& exact_size, const Options& options) {
  RunRecord rec;
  rec.input_id = inst.id;
  rec.n = inst.graph.order();
  rec.delta = inst.graph.max_degree();
  rec.variant = variant.label();
  rec.exact_size = exact_size;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto report = construct::build(inst.graph, variant);
    rec.case_taken = std::string(construct::to_string(report.case_taken));
    rec.code_size = report.code.size();
    rec.bound_value = report.bound.approx();
    rec.status = "ok";
    const std::size_t size = report.code.size();
    if (exact_size && *exact_size > size) {
      rec.status = "violation: code smaller than the exact optimum";
    } else if (exact::lower_bound(rec.n, rec.delta) > size) {
      rec.status = "violation: code below the lower bound";
    }
  } catch (const PreconditionError& e) {
    rec.status = std::string("precondition: ") + e.what();
  } catch (const InvariantViolation& e) {
    rec.status = std::string("violation: ") + e.what();
  }
  if (options.timings) {
    rec.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return rec;
}

}  // namespace

std::vector<RunRecord> run(const std::vector<Instance>& instances, const Options& options) {
  std::vector<RunRecord> records;
  for (const auto& inst : instances) {
    std::optional<std::size_t> exact_size;
    if (inst.graph.order() <= options.exact_limit && is_identifiable(inst.graph)) {
      exact_size = exact::min_identifying_code(inst.graph, options.exact_limit).size;
    }
    records.push_back(run_variant(inst, construct::Variant::main(), exact_size, options));
    if (!options.all_variants || records.back().status != "ok") continue;
    if (indep::colour(inst.graph, 2)) {
      records.push_back(run_variant(inst, construct::Variant::bipartite(), exact_size, options));
    }
    if (false_twin_classes(inst.graph).nontrivial.empty()) {
      records.push_back(run_variant(inst, construct::Variant::no_false_twins(), exact_size, options));
    }
  }
  return records;
}

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::size_t best = kUnset;
  std::vector<std::size_t> dist(n), parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnset);
    dist[root] = 0;
    parent[root] = kUnset;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == kUnset) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnset) return std::nullopt;
  return best;
}

namespace {

std::optional<double> min_slack(std::optional<double> current, double slack) {
  return current ? std::min(*current, slack) : slack;
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<Instance>& instances,
                                  const std::vector<RunRecord>& records) {
  std::map<std::string, const Instance*> by_id;
  std::vector<std::string> order;
  for (const auto& inst : instances) {
    by_id[inst.id] = &inst;
    if (std::find(order.begin(), order.end(), inst.family) == order.end()) order.push_back(inst.family);
  }

  struct Checked {
    const char* bound;
    const char* variant;
    const char* reference;
  };
  const Checked checked[] = {
      {"triangle-free", "main", "n - n/(D + 3D/(ln D - 1))"},
      {"bipartite", "bipartite", "n - n/(D + 9)"},
      {"no-false-twins", "nofalsetwins", "n - n(ln D - 1)/(3D)"},
  };

  std::vector<SummaryRow> rows;
  for (const auto& family : order) {
    for (const auto& c : checked) {
      SummaryRow row{family, c.bound, 0, 0, false, std::nullopt, c.reference};
      for (const auto& rec : records) {
        if (by_id.at(rec.input_id)->family != family || rec.variant != c.variant) continue;
        if (rec.status.starts_with("precondition")) continue;
        ++row.instances;
        if (rec.status != "ok") {
          ++row.violations;
        } else {
          row.worst_slack = min_slack(row.worst_slack, *rec.bound_value - static_cast<double>(*rec.code_size));
        }
      }
      if (row.instances == 0) continue;
      rows.push_back(row);
    }

    // Girth-5 bounds proved elsewhere; listed for comparison only.
    SummaryRow mindeg2{family, "girth5-mindeg2", 0, 0, true, std::nullopt, "7n/8 + 1"};
    SummaryRow mindeg{family, "girth5-mindeg", 0, 0, true, std::nullopt, "(3/2 + o(1)) n ln(d)/d, d = minimum degree"};
    for (const auto& inst : instances) {
      if (inst.family != family || inst.graph.order() == 0) continue;
      const auto g5 = girth(inst.graph);
      std::size_t min_deg = inst.graph.max_degree();
      for (Vertex v = 0; v < inst.graph.order(); ++v) min_deg = std::min(min_deg, inst.graph.degree(v));
      if (!g5 || *g5 < 5 || min_deg < 2) continue;
      ++mindeg.instances;
      ++mindeg2.instances;
      for (const auto& rec : records) {
        if (rec.input_id != inst.id || rec.variant != "main" || rec.status != "ok") continue;
        const double reference = 7.0 * static_cast<double>(inst.graph.order()) / 8.0 + 1.0;
        mindeg2.worst_slack = min_slack(mindeg2.worst_slack, reference - static_cast<double>(*rec.code_size));
      }
    }
    if (mindeg2.instances > 0) {
      rows.push_back(mindeg2);
      rows.push_back(mindeg);
    }
  }
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename T>
std::string opt(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string opt_fixed(const std::optional<double>& v, int digits) { return v ? fixed(*v, digits) : ""; }

}  // namespace

void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "input_id,n,delta,variant,case_taken,code_size,bound_value,exact_size,wall_time_ms,status\n";
  for (const auto& r : records) {
    out << csv_field(r.input_id) << ',' << r.n << ',' << r.delta << ',' << csv_field(r.variant) << ','
        << r.case_taken << ',' << opt(r.code_size) << ',' << opt_fixed(r.bound_value, 6) << ','
        << opt(r.exact_size) << ',' << opt_fixed(r.wall_time_ms, 3) << ',' << csv_field(r.status)
        << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<RunRecord>& records,
                const std::vector<SummaryRow>& summary) {
  using nlohmann::ordered_json;
  auto optional_json = [](const auto& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
  ordered_json doc;
  doc["records"] = ordered_json::array();
  for (const auto& r : records) {
    ordered_json j;
    j["input_id"] = r.input_id;
    j["n"] = r.n;
    j["delta"] = r.delta;
    j["variant"] = r.variant;
    j["case_taken"] = r.case_taken.empty() ? ordered_json(nullptr) : ordered_json(r.case_taken);
    j["code_size"] = optional_json(r.code_size);
    j["bound_value"] = optional_json(r.bound_value);
    j["exact_size"] = optional_json(r.exact_size);
    j["wall_time_ms"] = optional_json(r.wall_time_ms);
    j["status"] = r.status;
    doc["records"].push_back(std::move(j));
  }
  doc["summary"] = ordered_json::array();
  for (const auto& s : summary) {
    ordered_json j;
    j["family"] = s.family;
    j["bound"] = s.bound;
    j["reference"] = s.reference;
    j["instances"] = s.instances;
    j["violations"] = s.external ? ordered_json(nullptr) : ordered_json(s.violations);
    j["external"] = s.external;
    j["worst_slack"] = s.worst_slack ? ordered_json(*s.worst_slack) : ordered_json(nullptr);
    doc["summary"].push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

void write_text(std::ostream& out, const std::vector<RunRecord>& records,
                const std::vector<SummaryRow>& summary) {
  out << std::left << std::setw(30) << "instance" << std::setw(6) << "n" << std::setw(4) << "D"
      << std::setw(14) << "variant" << std::setw(19) << "case" << std::setw(6) << "code"
      << std::setw(12) << "bound" << std::setw(7) << "exact"
      << "status\n";
  for (const auto& r : records) {
    out << std::setw(30) << r.input_id << std::setw(6) << r.n << std::setw(4) << r.delta
        << std::setw(14) << r.variant << std::setw(19) << r.case_taken << std::setw(6)
        << opt(r.code_size) << std::setw(12) << opt_fixed(r.bound_value, 3) << std::setw(7)
        << opt(r.exact_size) << r.status;
    if (r.wall_time_ms) out << "  (" << fixed(*r.wall_time_ms, 3) << " ms)";
    out << '\n';
  }
  out << '\n'
      << std::setw(10) << "family" << std::setw(17) << "bound" << std::setw(11) << "instances"
      << std::setw(12) << "violations" << std::setw(13) << "worst slack"
      << "formula\n";
  for (const auto& s : summary) {
    out << std::setw(10) << s.family << std::setw(17) << s.bound << std::setw(11) << s.instances
        << std::setw(12) << (s.external ? std::string("external") : std::to_string(s.violations))
        << std::setw(13) << opt_fixed(s.worst_slack, 3)
        << s.reference << '\n';
  }
}

}  // namespace idcode::bench
