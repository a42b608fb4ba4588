#include "idcode/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "idcode/errors.hpp"

namespace idcode {

struct GraphBuilder {
  static Graph build(std::size_t n, std::span<const Edge> edges, EdgeListStats* stats) {
    Graph g;
    g.lists_.assign(n, {});
    g.rows_.assign(n, VertexSet(n));
    std::size_t duplicates = 0;
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw PreconditionError(Precondition::vertex_out_of_range,
                                "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") with n=" + std::to_string(n));
      }
      if (u == v) {
        throw PreconditionError(Precondition::loop_edge, "loop at vertex " + std::to_string(u));
      }
      if (g.rows_[u].contains(v)) {
        ++duplicates;
        continue;
      }
      g.rows_[u].insert(v);
      g.rows_[v].insert(u);
      ++g.edge_count_;
    }
    for (Vertex v = 0; v < n; ++v) {
      g.lists_[v] = g.rows_[v].to_vector();
      g.max_degree_ = std::max(g.max_degree_, g.lists_[v].size());
    }
    if (stats != nullptr) stats->duplicates_dropped = duplicates;
    return g;
  }
};

Rational Graph::average_degree() const {
  if (order() == 0) return Rational(0);
  return Rational(2 * static_cast<unsigned long long>(edge_count_)) /
         Rational(static_cast<unsigned long long>(order()));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : lists_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph from_edge_list(std::size_t n, std::span<const Edge> edges, EdgeListStats* stats) {
  return GraphBuilder::build(n, edges, stats);
}

Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
  return GraphBuilder::build(n, std::span<const Edge>(edges.begin(), edges.size()), nullptr);
}

VertexSet InducedSubgraph::lift(const VertexSet& local, std::size_t parent_order) const {
  VertexSet out(parent_order);
  for (Vertex v : local) out.insert(to_parent.at(v));
  return out;
}

VertexSet InducedSubgraph::restrict(const VertexSet& parent) const {
  VertexSet out(to_parent.size());
  for (Vertex i = 0; i < to_parent.size(); ++i) {
    if (parent.contains(to_parent[i])) out.insert(i);
  }
  return out;
}

namespace {
void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw PreconditionError(Precondition::vertex_out_of_range,
                            "vertex " + std::to_string(v) + " with n=" + std::to_string(g.order()));
  }
}
}  // namespace

VertexSet closed_ball(const Graph& g, Vertex v) {
  check_vertex(g, v);
  VertexSet ball = g.open_neighborhood(v);
  ball.insert(v);
  return ball;
}

std::size_t degree(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.degree(v);
}

std::size_t max_degree(const Graph& g) { return g.max_degree(); }

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      const auto& nu = g.open_neighborhood(u);
      const auto& nv = g.open_neighborhood(v);
      if (nu.intersects(nv)) return std::array<Vertex, 3>{u, v, (nu & nv).front()};
    }
  }
  return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

namespace {

// Groups vertices whose key sets are equal. Sorting costs O(n log n)
// comparisons of n/64 words each.
std::vector<std::vector<Vertex>> group_equal(const std::vector<VertexSet>& keys) {
  std::vector<Vertex> order(keys.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return keys[a] < keys[b]; });
  std::vector<std::vector<Vertex>> groups;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || keys[order[i]] != keys[order[i - 1]]) groups.emplace_back();
    groups.back().push_back(order[i]);
  }
  return groups;
}

}  // namespace

std::optional<Edge> find_twins(const Graph& g) {
  std::vector<VertexSet> balls;
  balls.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) balls.push_back(closed_ball(g, v));
  for (const auto& group : group_equal(balls)) {
    if (group.size() >= 2) return Edge{std::min(group[0], group[1]), std::max(group[0], group[1])};
  }
  return std::nullopt;
}

bool is_identifiable(const Graph& g) { return !find_twins(g).has_value(); }

FalseTwinPartition false_twin_classes(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (Vertex v = 0; v < n; ++v) rows.push_back(g.open_neighborhood(v));

  FalseTwinPartition p;
  p.with_twin = VertexSet(n);
  for (auto& group : group_equal(rows)) {
    // Equal open neighbourhoods force non-adjacency: u in N(v) = N(u) is impossible.
    VertexSet cls(n, std::span<const Vertex>(group));
    if (group.size() >= 2) {
      if (g.degree(group.front()) > 0) {
        ensure(group.size() <= g.max_degree(),
               "false-twin class larger than the maximum degree");
      }
      p.with_twin |= cls;
    }
    p.classes.push_back(std::move(cls));
  }
  std::sort(p.classes.begin(), p.classes.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  for (const auto& cls : p.classes) {
    if (cls.size() >= 2) p.nontrivial.push_back(cls);
  }
  p.without_twin = p.with_twin.complement();
  return p;
}

std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    VertexSet comp(n);
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (g.open_neighborhood(v).intersects(s)) return false;
  }
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph sub;
  sub.to_parent = s.to_vector();
  std::vector<Vertex> local(g.order(), g.order());
  for (Vertex i = 0; i < sub.to_parent.size(); ++i) local[sub.to_parent[i]] = i;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < sub.to_parent.size(); ++i) {
    for (Vertex w : g.neighbors(sub.to_parent[i])) {
      if (local[w] != g.order() && local[w] > i) edges.emplace_back(i, local[w]);
    }
  }
  sub.graph = from_edge_list(sub.to_parent.size(), edges);
  return sub;
}

}  // namespace idcode
