#include "idcode/certify.hpp"

#include <algorithm>
#include <map>

#include "idcode/errors.hpp"

namespace idcode::certify {

namespace {

using Reason = SeparationFailure::Reason;

// Failures among `targets` for traces B(v) ∩ code. Traces are sorted so equal
// ones become adjacent: O(k log k) comparisons of n/64 words.
std::vector<SeparationFailure> trace_failures(const Graph& g, const VertexSet& code,
                                              const VertexSet& targets) {
  std::vector<SeparationFailure> undominated;
  std::vector<std::pair<VertexSet, Vertex>> traces;
  for (Vertex v : targets) {
    VertexSet t = closed_ball(g, v) & code;
    if (t.empty()) undominated.push_back({v, v, Reason::undominated});
    traces.emplace_back(std::move(t), v);
  }
  std::sort(traces.begin(), traces.end());
  std::vector<SeparationFailure> pairs;
  for (std::size_t i = 0; i < traces.size();) {
    std::size_t j = i + 1;
    while (j < traces.size() && traces[j].first == traces[i].first) ++j;
    for (std::size_t a = i; a < j; ++a) {
      for (std::size_t b = a + 1; b < j; ++b) {
        pairs.push_back({traces[a].second, traces[b].second, Reason::unseparated});
      }
    }
    i = j;
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
  });
  undominated.insert(undominated.end(), pairs.begin(), pairs.end());
  return undominated;
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& code, const VertexSet& targets) {
  for (Vertex u : targets) {
    if (!code.contains(u) && !g.open_neighborhood(u).intersects(code)) return false;
  }
  return true;
}

std::vector<SeparationFailure> identifying_failures(const Graph& g, const VertexSet& code) {
  return trace_failures(g, code, g.vertices());
}

bool is_identifying_code(const Graph& g, const VertexSet& code) {
  return identifying_failures(g, code).empty();
}

bool is_s_identifying(const Graph& g, const VertexSet& subset, const VertexSet& code) {
  if (!code.is_subset_of(subset)) {
    throw PreconditionError(Precondition::not_subset, "code is not contained in the subset");
  }
  // For code ⊆ S, B_{G[S]}(v) ∩ code = B_G(v) ∩ code.
  return trace_failures(g, code, subset).empty();
}

VertexSet s_isolated_vertices(const Graph& g, const VertexSet& s) {
  VertexSet out(g.order());
  for (Vertex x : s) {
    if (!g.open_neighborhood(x).intersects(s)) out.insert(x);
  }
  return out;
}

bool is_strong_induced_matching(const Graph& g, std::span<const Edge> matching) {
  const std::size_t n = g.order();
  VertexSet r(n);
  for (const auto& [u, v] : matching) {
    if (u >= n || v >= n || !g.adjacent(u, v)) return false;
    if (r.contains(u) || r.contains(v)) return false;
    r.insert(u);
    r.insert(v);
  }
  VertexSet l(n);
  for (Vertex x : r) {
    // Induced: the partner is the only neighbour inside R.
    if (g.open_neighborhood(x).intersection_size(r) != 1) return false;
    l |= g.open_neighborhood(x);
  }
  l -= r;
  if (!is_independent(g, l)) return false;
  for (Vertex x : r) {
    if (!g.open_neighborhood(x).intersects(l)) return false;
  }
  return true;
}

bool is_quasi_identifying(const Graph& g, const StrongMatching& sm, const VertexSet& code) {
  const VertexSet lr = sm.l | sm.r;
  if (!code.is_subset_of(lr)) {
    throw PreconditionError(Precondition::not_subset, "quasi code is not contained in L ∪ R");
  }
  for (const auto& [u, v] : sm.edges) {
    if (!code.contains(u) && !code.contains(v)) return false;
  }
  // Traces inside G' = G[L ∪ R] coincide with traces in G because code ⊆ L ∪ R.
  for (const auto& f : trace_failures(g, code, lr)) {
    if (f.reason == Reason::undominated) return false;
    const bool exempt = sm.l.contains(f.u) && sm.l.contains(f.v) &&
                        (g.open_neighborhood(f.u) & lr) == (g.open_neighborhood(f.v) & lr);
    if (!exempt) return false;
  }
  return true;
}

ComplementConditions check_complement_code_conditions(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) {
    throw PreconditionError(Precondition::not_independent, "S is not an independent set");
  }
  if (auto t = find_triangle(g)) throw PreconditionError(Precondition::has_triangle);
  if (!is_identifiable(g)) throw PreconditionError(Precondition::not_identifiable);

  ComplementConditions c;
  c.no_isolated_vertex = std::none_of(s.begin(), s.end(), [&](Vertex v) { return g.degree(v) == 0; });

  std::map<VertexSet, Vertex> seen;
  c.no_false_twins = true;
  for (Vertex v : s) {
    if (!seen.emplace(g.open_neighborhood(v), v).second) {
      c.no_false_twins = false;
      break;
    }
  }

  c.degree_one_escape = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) continue;
    VertexSet second(g.order());
    for (Vertex w : g.neighbors(v)) second |= g.open_neighborhood(w);
    second -= closed_ball(g, v);
    if ((second - s).empty()) {
      c.degree_one_escape = false;
      break;
    }
  }

  const VertexSet rest = s.complement();
  c.complement_without_isolated_edge = true;
  for (Vertex u : rest) {
    const VertexSet nu = g.open_neighborhood(u) & rest;
    if (nu.size() != 1) continue;
    const Vertex v = nu.front();
    if ((g.open_neighborhood(v) & rest).size() == 1) {
      c.complement_without_isolated_edge = false;
      break;
    }
  }

  if (c.all()) {
    ensure(is_identifying_code(g, rest),
           "complement of S satisfies all four conditions but is not an identifying code");
  }
  return c;
}

}  // namespace idcode::certify
