#include "idcode/families.hpp"

#include <algorithm>
#include <sstream>

#include "idcode/errors.hpp"

namespace idcode::families {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps every residue equally likely.
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::string FamilySpec::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::path:
      os << "path_" << a;
      break;
    case Kind::cycle:
      os << "cycle_" << a;
      break;
    case Kind::star:
      os << "star_" << a;
      break;
    case Kind::complete_bipartite:
      os << "kbip_" << a << "_" << b;
      break;
    case Kind::kary_tree:
      os << "tree_" << a << "_" << b;
      break;
    case Kind::subdivided_complete:
      os << "subdiv_k" << a;
      break;
    case Kind::random_bipartite:
      os << "randbip_" << a << "_" << b << "_p" << p << "_s" << seed;
      break;
    case Kind::random_triangle_free:
      os << "randtf_" << a << "_" << b << "_s" << seed;
      break;
    case Kind::planted_false_twins:
      os << "twins_" << a << "_" << b << "_" << classes << "x" << class_size << "_s" << seed;
      break;
  }
  return os.str();
}

namespace {

void require(bool ok, const FamilySpec& spec, const char* what) {
  if (!ok) throw PreconditionError(Precondition::invalid_family, spec.name() + ": " + what);
}

std::vector<Edge> random_triangle_free_edges(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<VertexSet> adj(n, VertexSet(n));
  std::vector<Edge> edges;
  std::size_t rejections = 0;
  if (n < 2) return edges;
  while (edges.size() < m && rejections < 50 * m) {
    const Vertex u = rng.below(n);
    const Vertex v = rng.below(n);
    if (u == v || adj[u].contains(v) || adj[u].intersects(adj[v])) {
      ++rejections;
      continue;
    }
    adj[u].insert(v);
    adj[v].insert(u);
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return edges;
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  switch (spec.kind) {
    case Kind::path:
      require(spec.a >= 1, spec, "needs at least one vertex");
      n = spec.a;
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case Kind::cycle:
      require(spec.a >= 3, spec, "needs at least three vertices");
      n = spec.a;
      for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      break;
    case Kind::star:
      require(spec.a >= 1, spec, "needs at least one vertex");
      n = spec.a;
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case Kind::complete_bipartite:
      require(spec.a >= 1 && spec.b >= 1, spec, "both sides need a vertex");
      n = spec.a + spec.b;
      for (Vertex u = 0; u < spec.a; ++u) {
        for (Vertex v = spec.a; v < n; ++v) edges.emplace_back(u, v);
      }
      break;
    case Kind::kary_tree: {
      require(spec.a >= 1, spec, "arity must be positive");
      std::size_t level = 1;
      n = 1;
      for (std::size_t h = 0; h < spec.b; ++h) {
        level *= spec.a;
        n += level;
      }
      // Breadth-first numbering: the children of v are a·v+1 .. a·v+a.
      for (Vertex v = 1; v < n; ++v) edges.emplace_back((v - 1) / spec.a, v);
      break;
    }
    case Kind::subdivided_complete: {
      require(spec.a >= 1, spec, "needs at least one vertex");
      n = spec.a;
      for (Vertex i = 0; i < spec.a; ++i) {
        for (Vertex j = i + 1; j < spec.a; ++j) {
          const Vertex x = n++;
          const Vertex y = n++;
          edges.emplace_back(i, x);
          edges.emplace_back(x, y);
          edges.emplace_back(y, j);
        }
      }
      break;
    }
    case Kind::random_bipartite: {
      require(spec.a >= 1 && spec.b >= 1, spec, "both sides need a vertex");
      require(spec.p >= 0.0 && spec.p <= 1.0, spec, "p outside [0, 1]");
      n = spec.a + spec.b;
      Rng rng(spec.seed);
      for (Vertex u = 0; u < spec.a; ++u) {
        for (Vertex v = spec.a; v < n; ++v) {
          if (rng.unit() < spec.p) edges.emplace_back(u, v);
        }
      }
      break;
    }
    case Kind::random_triangle_free: {
      require(spec.a >= 1, spec, "needs at least one vertex");
      n = spec.a;
      Rng rng(spec.seed);
      edges = random_triangle_free_edges(n, spec.b, rng);
      break;
    }
    case Kind::planted_false_twins: {
      require(spec.a >= 1, spec, "needs at least one vertex");
      require(spec.class_size >= 2, spec, "planted classes need two members");
      require(spec.classes <= spec.a, spec, "more classes than base vertices");
      n = spec.a;
      Rng rng(spec.seed);
      edges = random_triangle_free_edges(n, spec.b, rng);
      std::vector<std::vector<Vertex>> nbrs(spec.a);
      for (const auto& [u, v] : edges) {
        nbrs[u].push_back(v);
        nbrs[v].push_back(u);
      }
      std::vector<Vertex> pool(spec.a);
      for (Vertex v = 0; v < spec.a; ++v) pool[v] = v;
      // Partial Fisher-Yates shuffle picks the distinct class seeds.
      for (std::size_t c = 0; c < spec.classes; ++c) {
        std::swap(pool[c], pool[c + rng.below(pool.size() - c)]);
        const Vertex origin = pool[c];
        for (std::size_t copy = 1; copy < spec.class_size; ++copy) {
          const Vertex clone = n++;
          for (Vertex w : nbrs[origin]) edges.emplace_back(w, clone);
        }
      }
      break;
    }
  }
  Graph g = from_edge_list(n, edges);
  ensure(is_triangle_free(g), spec.name() + " generated a triangle");
  return g;
}

std::optional<std::size_t> known_gamma_id(const FamilySpec& spec) {
  switch (spec.kind) {
    case Kind::cycle:
      if (spec.a >= 7 && spec.a % 2 == 1) return (spec.a + 3) / 2;
      return std::nullopt;
    case Kind::star:
      if (spec.a >= 3) return spec.a - 1;
      return std::nullopt;
    case Kind::complete_bipartite:
      if (spec.a == spec.b && spec.a >= 3) return 2 * spec.a - 2;
      if (std::min(spec.a, spec.b) == 1 && std::max(spec.a, spec.b) >= 2) {
        return std::max(spec.a, spec.b);
      }
      return std::nullopt;
    case Kind::kary_tree: {
      if (spec.a < 2 || spec.b < 1) return std::nullopt;
      std::size_t n = 1, level = 1;
      for (std::size_t h = 0; h < spec.b; ++h) {
        level *= spec.a;
        n += level;
      }
      if (spec.b == 1) return n - 1;  // a star
      // ⌈n - n/(Δ - 1 + 1/Δ)⌉ = ⌈n - nΔ/(Δ² - Δ + 1)⌉ with Δ = a + 1.
      const std::size_t delta = spec.a + 1;
      const std::size_t denom = delta * delta - delta + 1;
      const std::size_t removed = n * delta / denom;  // floor
      return n - removed;
    }
    default:
      return std::nullopt;
  }
}

InducedSubgraph largest_component(const Graph& g) {
  const auto comps = components(g);
  if (comps.empty()) return induced_subgraph(g, g.vertices());
  const auto best = std::max_element(comps.begin(), comps.end(), [](const VertexSet& x, const VertexSet& y) {
    return x.size() < y.size();
  });
  return induced_subgraph(g, *best);
}

}  // namespace idcode::families
