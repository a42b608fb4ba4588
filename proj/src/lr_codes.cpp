#include "idcode/lr_codes.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "idcode/certify.hpp"
#include "idcode/errors.hpp"

namespace idcode::lr {

StrongMatching extract_strong_matching(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) {
    throw PreconditionError(Precondition::not_independent, "S is not an independent set");
  }
  if (find_triangle(g)) throw PreconditionError(Precondition::has_triangle);

  std::vector<Edge> matched;
  for (const auto& [u, v] : g.edges()) {
    if (g.degree(u) < 2 || g.degree(v) < 2) continue;
    VertexSet around = g.open_neighborhood(u) | g.open_neighborhood(v);
    around.erase(u);
    around.erase(v);
    if (around.is_subset_of(s)) matched.emplace_back(u, v);
  }
  auto sm = StrongMatching::from_edges(g, std::move(matched));
  ensure(certify::is_strong_induced_matching(g, sm.edges), "extracted matching is not strong");
  ensure(sm.l.is_subset_of(s), "L(M) escapes S");
  return sm;
}

namespace {

// One contracted path l_tail - r_tail - r_head - l_head per matched edge of
// the degree-2 part. `head` names the L endpoint the arc points to; the
// R-vertex adjacent to it is the one placed in the code.
struct Arc {
  Vertex la, ra, rb, lb;
  Vertex head;

  Vertex other(Vertex l) const { return l == la ? lb : la; }
  Vertex coded_r() const { return head == lb ? rb : ra; }
};

Vertex other_neighbor(const Graph& g, Vertex r, Vertex partner) {
  for (Vertex w : g.neighbors(r)) {
    if (w != partner) return w;
  }
  throw InvariantViolation("degree-2 matched vertex without an L-neighbour");
}

}  // namespace

QuasiCode quasi_code_deg2(const Graph& g, const StrongMatching& sm) {
  const std::size_t n = g.order();
  for (Vertex r : sm.r1) {
    if (g.degree(r) != 2) {
      throw PreconditionError(Precondition::degree_not_two, "vertex " + std::to_string(r));
    }
  }

  std::vector<Edge> part_edges;
  std::vector<Arc> arcs;
  for (const auto& [a, b] : sm.edges) {
    if (!sm.r1.contains(a)) continue;
    part_edges.emplace_back(a, b);
    const Vertex la = other_neighbor(g, a, b);
    const Vertex lb = other_neighbor(g, b, a);
    arcs.push_back({la, a, b, lb, lb});
  }
  const auto part = StrongMatching::from_edges(g, part_edges);

  std::vector<std::vector<std::size_t>> incident(n);
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    incident[arcs[i].la].push_back(i);
    incident[arcs[i].lb].push_back(i);
    ++indeg[arcs[i].head];
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_arc(n, kNone);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<Vertex> roots;

  for (Vertex root : part.l) {
    if (visited[root]) continue;
    roots.push_back(root);
    visited[root] = true;
    std::vector<Vertex> members{root};
    // Iterative depth-first spanning tree; arcs are scanned in creation order.
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == incident[v].size()) {
        stack.pop_back();
        continue;
      }
      const std::size_t arc = incident[v][next++];
      const Vertex w = arcs[arc].other(v);
      if (visited[w]) continue;
      visited[w] = true;
      parent_arc[w] = arc;
      depth[w] = depth[v] + 1;
      members.push_back(w);
      stack.emplace_back(w, 0);
    }

    std::sort(members.begin(), members.end(), [&](Vertex x, Vertex y) {
      return std::tuple(depth[y], x) < std::tuple(depth[x], y);
    });
    for (Vertex v : members) {
      if (v == root || indeg[v] != 1) continue;
      Arc& arc = arcs[parent_arc[v]];
      const Vertex parent = arc.other(v);
      if (arc.head == v) {
        arc.head = parent;
        --indeg[v];
        ++indeg[parent];
      } else {
        arc.head = v;
        ++indeg[v];
        --indeg[parent];
      }
    }
  }

  VertexSet code = part.l;
  for (const Arc& arc : arcs) code.insert(arc.coded_r());
  for (Vertex root : roots) {
    if (indeg[root] != 1) continue;
    // The root and its single coded R-neighbour only see each other; trade
    // the root for that neighbour's partner.
    for (std::size_t i : incident[root]) {
      if (arcs[i].head != root) continue;
      const Vertex r = arcs[i].coded_r();
      code.erase(root);
      code.insert(r == arcs[i].ra ? arcs[i].rb : arcs[i].ra);
      break;
    }
  }

  ensure(2 * code.size() <= 2 * part.l.size() + part.r.size(),
         "degree-2 quasi code larger than |L1| + |R1|/2");
  ensure(2 * (code & part.l).size() >= part.l.size(), "degree-2 quasi code holds under half of L1");
  ensure((certify::s_isolated_vertices(g, code) & part.r).empty(),
         "degree-2 quasi code leaves a C-isolated R1 vertex");
  ensure(certify::is_quasi_identifying(g, part, code), "degree-2 code is not quasi-identifying");
  return {code, (part.l | part.r) - code};
}

namespace {

Vertex lowest_outside(const VertexSet& candidates, const VertexSet& code) {
  const VertexSet free = candidates - code;
  ensure(!free.empty(), "no candidate left to add");
  return free.front();
}

// Replaces every C-isolated vertex l of L (ascending id, re-checked as the
// code changes) by its lowest R-neighbour.
void repair_isolated(const Graph& g, const StrongMatching& sm, VertexSet& code) {
  for (Vertex l : sm.l) {
    if (!code.contains(l) || g.open_neighborhood(l).intersects(code)) continue;
    code.erase(l);
    code.insert((g.open_neighborhood(l) & sm.r).front());
  }
}

std::vector<Edge> r2_pairs(const StrongMatching& sm) {
  std::vector<Edge> out;
  for (const auto& e : sm.edges) {
    if (sm.r2.contains(e.first)) out.push_back(e);
  }
  return out;
}

void certify_candidate(const Graph& g, const StrongMatching& sm, const VertexSet& code,
                       const char* name) {
  ensure(certify::is_quasi_identifying(g, sm, code),
         std::string("candidate ") + name + " is not quasi-identifying");
  ensure(certify::s_isolated_vertices(g, code).empty(),
         std::string("candidate ") + name + " has C-isolated vertices");
}

}  // namespace

QuasiCode quasi_code_general(const Graph& g, const StrongMatching& sm, QuasiLedger* ledger) {
  ensure(certify::is_strong_induced_matching(g, sm.edges), "matching is not strong");
  const VertexSet lr = sm.l | sm.r;
  ensure(is_identifiable(induced_subgraph(g, lr).graph), "G[L ∪ R] is not identifiable");

  const QuasiCode deg2 = quasi_code_deg2(g, sm);
  const auto pairs = r2_pairs(sm);

  // C_a: the whole of L2 plus one well-connected endpoint per R2 pair.
  VertexSet code_a = deg2.code | sm.l2;
  std::vector<Vertex> starred;
  for (const auto& [a, b] : pairs) {
    const bool a_ok = g.open_neighborhood(a).intersection_size(sm.l) >= 2;
    const bool b_ok = g.open_neighborhood(b).intersection_size(sm.l) >= 2;
    ensure(a_ok || b_ok, "R2 pair without an endpoint having two L-neighbours");
    starred.push_back(a_ok ? a : b);
    code_a.insert(starred.back());
  }
  for (Vertex r : starred) {
    const VertexSet l_nbrs = g.open_neighborhood(r) & sm.l;
    if (l_nbrs.intersection_size(code_a) < 2) code_a.insert(lowest_outside(l_nbrs, code_a));
  }
  repair_isolated(g, sm, code_a);

  // C_b: the whole of R2 plus one L-neighbour per R2 pair.
  VertexSet code_b = deg2.code | sm.r2;
  for (const auto& [a, b] : pairs) {
    code_b.insert(((g.open_neighborhood(a) | g.open_neighborhood(b)) & sm.l).front());
  }
  repair_isolated(g, sm, code_b);

  certify_candidate(g, sm, code_a, "C_a");
  certify_candidate(g, sm, code_b, "C_b");

  const std::size_t l1 = sm.l1.size(), r1 = sm.r1.size(), l2 = sm.l2.size(), r2 = sm.r2.size();
  ensure(2 * code_a.size() <= 2 * l1 + r1 + 2 * l2 + r2 + std::min(l1, r2),
         "C_a exceeds |L1|+|R1|/2+|L2|+|R2|/2+min{|L1|/2,|R2|/2}");
  ensure(2 * code_b.size() <= 2 * l1 + r1 + 3 * r2, "C_b exceeds |L1|+|R1|/2+3|R2|/2");

  const bool chose_a = code_a.size() <= code_b.size();
  QuasiCode out{chose_a ? code_a : code_b, VertexSet(g.order())};
  out.leftover = lr - out.code;
  ensure(3 * out.leftover.size() >= sm.l.size(), "|L'| < |L|/3");

  if (ledger != nullptr) {
    *ledger = {l1, r1, l2, r2, deg2.code.size(), code_a.size(), code_b.size(), chose_a,
               out.leftover.size(), sm.l.size()};
  }
  return out;
}

}  // namespace idcode::lr
