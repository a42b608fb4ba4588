#include "idcode/construct.hpp"

#include <charconv>
#include <chrono>
#include <stdexcept>
#include <string>

#include "idcode/certify.hpp"
#include "idcode/errors.hpp"

namespace idcode::construct {

std::string_view to_string(CaseTaken c) {
  return c == CaseTaken::case1_matching ? "case1_matching" : "case2_false_twins";
}

std::string Variant::label() const {
  switch (kind) {
    case VariantKind::main:
      return "main";
    case VariantKind::bipartite:
      return "bipartite";
    case VariantKind::chromatic:
      return "chromatic:" + std::to_string(colours);
    case VariantKind::no_false_twins:
      return "nofalsetwins";
    case VariantKind::generalized:
      return "generalized:" + provider_name;
  }
  return "unknown";
}

std::optional<Variant> Variant::parse(std::string_view text) {
  if (text == "main") return main();
  if (text == "bipartite") return bipartite();
  if (text == "nofalsetwins") return no_false_twins();
  constexpr std::string_view prefix = "chromatic:";
  if (text.starts_with(prefix)) {
    const auto digits = text.substr(prefix.size());
    std::size_t k = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || end != digits.data() + digits.size() || k < 2) return std::nullopt;
    return k == 2 ? bipartite() : chromatic(k);
  }
  return std::nullopt;
}

Quantity theorem_bound(std::size_t n, std::size_t delta, const Quantity& f_prime) {
  return count(n) - count(n) / (count(delta) + count(3) / f_prime);
}

Quantity no_false_twins_bound(std::size_t n, std::size_t delta) {
  const Quantity d = count(delta);
  return count(n) - count(n) * (ln(d) - count(1)) / (count(3) * d);
}

namespace {

using Clock = std::chrono::steady_clock;

class PhaseClock {
 public:
  explicit PhaseClock(std::vector<PhaseTiming>& out) : out_(out), last_(Clock::now()) {}

  void lap(std::string phase) {
    const auto now = Clock::now();
    out_.push_back({std::move(phase), std::chrono::duration<double, std::milli>(now - last_).count()});
    last_ = now;
  }

 private:
  std::vector<PhaseTiming>& out_;
  Clock::time_point last_;
};

void check_preconditions(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError(Precondition::disconnected);
  if (auto twins = find_twins(g)) {
    throw PreconditionError(Precondition::not_identifiable,
                            "twins " + std::to_string(twins->first) + " and " +
                                std::to_string(twins->second));
  }
  if (auto t = find_triangle(g)) {
    throw PreconditionError(Precondition::has_triangle,
                            std::to_string((*t)[0]) + "," + std::to_string((*t)[1]) + "," +
                                std::to_string((*t)[2]));
  }
  if (g.max_degree() < 3) {
    throw PreconditionError(Precondition::max_degree_below_3, "Δ=" + std::to_string(g.max_degree()));
  }
}

struct Case1Result {
  VertexSet code;
  Case1Details details;
};

Case1Result run_case1(const Graph& g, const VertexSet& y, const indep::FractionProvider& provider,
                      PhaseClock& clock) {
  Case1Details d;
  d.y = y;
  d.s = indep::good_independent_set(g, y, provider);
  clock.lap("independent_set");

  const StrongMatching sm = lr::extract_strong_matching(g, d.s);
  d.l = sm.l;
  d.r = sm.r;
  d.matching_edges = sm.edges.size();
  clock.lap("matching");

  const lr::QuasiCode quasi = lr::quasi_code_general(g, sm, &d.ledger);
  d.c1 = quasi.code;
  d.leftover = quasi.leftover;
  clock.lap("quasi_code");

  const VertexSet rest = g.vertices() - (sm.l | sm.r);
  d.c2 = rest - d.s;
  ensure(sm.l.is_subset_of(d.s), "L(M) is not inside S");
  ensure(is_identifiable(induced_subgraph(g, rest).graph), "G[V \\ (L ∪ R)] is not identifiable");
  ensure(certify::is_s_identifying(g, rest, d.c2), "C2 is not a (V \\ (L ∪ R))-identifying code");
  for (Vertex l : sm.l) {
    ensure((g.open_neighborhood(l) & rest).is_subset_of(d.c2),
           "L-vertex " + std::to_string(l) + " has a neighbour outside C2 in V \\ (L ∪ R)");
  }

  VertexSet code = d.c1 | d.c2;
  const VertexSet outside = g.vertices() - code;
  ensure(outside == ((d.s - sm.l) | d.leftover), "complement differs from (S \\ L) ∪ L'");
  ensure(3 * outside.size() >= d.s.size(), "|V \\ C| < |S|/3");
  clock.lap("assemble");
  return {std::move(code), std::move(d)};
}

void certify_report(const Graph& g, ConstructionReport& report) {
  const auto failures = certify::identifying_failures(g, report.code);
  ensure(failures.empty(), std::to_string(failures.size()) + " identifying failures in the " +
                               std::string(to_string(report.case_taken)) + " code");
  ensure(report.bound.at_least(report.code.size()),
         "code of size " + std::to_string(report.code.size()) + " exceeds bound " + report.bound.str());
  report.certified = true;
}

Variant variant_for(const indep::FractionProvider& provider) {
  switch (provider.kind()) {
    case indep::FractionProvider::Kind::shearer:
      return Variant::main();
    case indep::FractionProvider::Kind::chromatic:
      return provider.colours() == 2 ? Variant::bipartite() : Variant::chromatic(provider.colours());
    case indep::FractionProvider::Kind::custom:
      break;
  }
  return {VariantKind::generalized, 0, provider.name()};
}

ConstructionReport run_pipeline(const Graph& g, const indep::FractionProvider& provider) {
  ConstructionReport report;
  PhaseClock clock(report.timings);
  report.variant = variant_for(provider);
  report.n = g.order();
  report.delta = g.max_degree();
  report.fraction = provider.guaranteed_fraction(report.delta);
  report.threshold = count(3 * report.n) / (count(report.delta) * report.fraction + count(3));
  report.bound = theorem_bound(report.n, report.delta, report.fraction);

  const FalseTwinPartition twins = false_twin_classes(g);
  report.y_size = twins.without_twin.size();
  report.false_twin_classes = twins.nontrivial.size();
  clock.lap("false_twins");

  const Comparison cmp = compare(count(report.y_size), report.threshold);
  const bool exact_tie = cmp == Comparison::ambiguous && report.threshold.is_exact();
  report.threshold_ambiguous = cmp == Comparison::ambiguous && !exact_tie;
  const bool run1 = cmp != Comparison::less;
  const bool run2 = cmp == Comparison::less || report.threshold_ambiguous;

  std::optional<Case1Result> case1;
  if (run1) case1 = run_case1(g, twins.without_twin, provider, clock);
  std::optional<VertexSet> case2;
  if (run2) {
    ensure(report.delta * twins.nontrivial.size() >= twins.with_twin.size(), "|F| < |X|/Δ");
    case2 = case2_false_twin_code(g, twins);
    clock.lap("case2");
  }

  if (case1 && (!case2 || case1->code.size() <= case2->size())) {
    report.case_taken = CaseTaken::case1_matching;
    report.code = std::move(case1->code);
    report.case1 = std::move(case1->details);
  } else {
    report.case_taken = CaseTaken::case2_false_twins;
    report.code = std::move(*case2);
  }
  if (report.threshold_ambiguous) {
    report.notes.push_back("threshold comparison within rounding guard; both cases were run");
  }
  certify_report(g, report);
  clock.lap("certify");
  return report;
}

}  // namespace

VertexSet case2_false_twin_code(const Graph& g, const FalseTwinPartition& p) {
  if (!is_connected(g)) throw PreconditionError(Precondition::disconnected);
  if (!is_identifiable(g)) throw PreconditionError(Precondition::not_identifiable);
  if (!is_triangle_free(g)) throw PreconditionError(Precondition::has_triangle);
  const std::size_t n = g.order();
  if (n == 4 && g.edge_count() == 4 && g.max_degree() == 2) {
    throw PreconditionError(Precondition::isomorphic_to_c4);
  }

  VertexSet code = g.vertices();
  if (n == 3 && g.edge_count() == 2) {
    // P3: dropping one leaf would leave the centre and the other leaf
    // unseparated, so keep both leaves instead.
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) == 2) code.erase(v);
    }
  } else {
    for (const auto& cls : p.nontrivial) code.erase(cls.front());
  }
  ensure(code.size() + p.nontrivial.size() <= n, "case-2 code larger than n - |F|");
  ensure(certify::is_identifying_code(g, code), "case-2 code is not identifying");
  return code;
}

ConstructionReport build_identifying_code(const Graph& g) {
  check_preconditions(g);
  return run_pipeline(g, indep::FractionProvider::shearer());
}

ConstructionReport build_with_fraction(const Graph& g, const indep::FractionProvider& provider) {
  check_preconditions(g);
  if (provider.kind() == indep::FractionProvider::Kind::chromatic &&
      !indep::colour(g, provider.colours())) {
    ConstructionReport report = run_pipeline(g, indep::FractionProvider::shearer());
    report.notes.insert(report.notes.begin(), "no " + std::to_string(provider.colours()) +
                                                  "-colouring found; fell back to the main variant");
    return report;
  }
  return run_pipeline(g, provider);
}

ConstructionReport build_no_false_twins(const Graph& g) {
  check_preconditions(g);
  const FalseTwinPartition twins = false_twin_classes(g);
  if (!twins.nontrivial.empty()) {
    const auto& cls = twins.nontrivial.front();
    throw PreconditionError(Precondition::false_twins_present,
                            "class starting at vertex " + std::to_string(cls.front()));
  }

  ConstructionReport report;
  PhaseClock clock(report.timings);
  const auto provider = indep::FractionProvider::shearer();
  report.variant = Variant::no_false_twins();
  report.n = g.order();
  report.delta = g.max_degree();
  report.fraction = provider.guaranteed_fraction(report.delta);
  report.threshold = count(0);
  report.bound = no_false_twins_bound(report.n, report.delta);
  report.y_size = report.n;
  auto case1 = run_case1(g, g.vertices(), provider, clock);
  report.case_taken = CaseTaken::case1_matching;
  report.code = std::move(case1.code);
  report.case1 = std::move(case1.details);
  certify_report(g, report);
  clock.lap("certify");
  return report;
}

ConstructionReport build(const Graph& g, const Variant& variant) {
  switch (variant.kind) {
    case VariantKind::main:
      return build_identifying_code(g);
    case VariantKind::generalized:
      throw std::invalid_argument("the generalized variant needs a provider; use build_with_fraction");
    case VariantKind::bipartite:
      return build_with_fraction(g, indep::FractionProvider::chromatic(2));
    case VariantKind::chromatic:
      return build_with_fraction(g, indep::FractionProvider::chromatic(variant.colours));
    case VariantKind::no_false_twins:
      return build_no_false_twins(g);
  }
  return build_identifying_code(g);
}

}  // namespace idcode::construct
