#include "idcode/indep.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "idcode/errors.hpp"

namespace idcode::indep {

FractionProvider FractionProvider::shearer() {
  FractionProvider p;
  p.kind_ = Kind::shearer;
  p.name_ = "shearer";
  p.fraction_ = [](std::size_t delta) {
    const Quantity d = count(delta);
    return (ln(d) - count(1)) / d;
  };
  p.set_ = [](const Graph& g, const VertexSet& subset) {
    const auto sub = induced_subgraph(g, subset);
    return sub.lift(shearer_independent_set(sub.graph), g.order());
  };
  return p;
}

FractionProvider FractionProvider::chromatic(std::size_t k) {
  if (k < 2) throw PreconditionError(Precondition::colouring_failed, "need at least 2 colours");
  FractionProvider p;
  p.kind_ = Kind::chromatic;
  p.colours_ = k;
  p.name_ = "chromatic:" + std::to_string(k);
  p.fraction_ = [k](std::size_t) { return Quantity(Rational(1, static_cast<long long>(k))); };
  p.set_ = [k](const Graph& g, const VertexSet& subset) {
    if (k == 2) {
      const auto sub = induced_subgraph(g, subset);
      return sub.lift(chromatic_independent_set(sub.graph, k), g.order());
    }
    // A colouring of G restricts to one of G[subset]; colouring the whole
    // graph avoids a heuristic failing on the subgraph only.
    return chromatic_independent_set(g, k, subset);
  };
  return p;
}

FractionProvider FractionProvider::custom(std::string name, FractionFn fraction, SetFn independent_set) {
  FractionProvider p;
  p.kind_ = Kind::custom;
  p.name_ = std::move(name);
  p.fraction_ = std::move(fraction);
  p.set_ = std::move(independent_set);
  return p;
}

Quantity FractionProvider::fraction(std::size_t delta) const { return fraction_(delta); }

Quantity FractionProvider::guaranteed_fraction(std::size_t delta) const {
  const Quantity third(Rational(1, 3));
  const Quantity f = fraction(delta);
  if (compare(f, Quantity(Rational(0))) != Comparison::greater) {
    throw PreconditionError(Precondition::max_degree_below_3,
                            name_ + " fraction is not positive at Δ=" + std::to_string(delta));
  }
  return compare(f, third) == Comparison::less ? f : third;
}

VertexSet FractionProvider::independent_set(const Graph& g, const VertexSet& subset) const {
  VertexSet s = set_(g, subset);
  ensure(s.is_subset_of(subset), name_ + " independent set leaves its subset");
  ensure(is_independent(g, s), name_ + " returned a non-independent set");
  return s;
}

VertexSet shearer_independent_set(const Graph& g) {
  if (auto t = find_triangle(g)) {
    throw PreconditionError(Precondition::has_triangle,
                            std::to_string((*t)[0]) + "," + std::to_string((*t)[1]) + "," +
                                std::to_string((*t)[2]));
  }
  const std::size_t n = g.order();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> deg(n);
  // nbr_deg[v] = sum of current degrees of v's live neighbours = number of
  // edges that disappear with B(v), since N(v) is independent.
  std::vector<std::size_t> nbr_deg(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) nbr_deg[v] += deg[w];
  }
  std::size_t live_vertices = n;
  std::size_t live_edges = g.edge_count();

  auto potential = [](std::size_t vertices, std::size_t edges) {
    if (vertices == 0) return 0.0;
    const double d = 2.0 * static_cast<double>(edges) / static_cast<double>(vertices);
    return independence_ratio(d) * static_cast<double>(vertices);
  };

  VertexSet chosen(n);
  std::vector<Vertex> removed;
  std::vector<Vertex> touched;
  std::vector<bool> mark(n, false);
  while (live_vertices > 0) {
    Vertex best = n;
    double best_score = -1.0;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      const double score = potential(live_vertices - deg[v] - 1, live_edges - nbr_deg[v]);
      if (score > best_score) {
        best_score = score;
        best = v;
      }
    }
    chosen.insert(best);

    removed.clear();
    removed.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (alive[w]) removed.push_back(w);
    }
    live_edges -= nbr_deg[best];
    live_vertices -= removed.size();
    for (Vertex w : removed) alive[w] = false;

    // Degrees change at distance 1 of the removed ball, neighbour-degree sums
    // at distance 2; recompute both locally.
    touched.clear();
    for (Vertex w : removed) {
      for (Vertex x : g.neighbors(w)) {
        if (!alive[x]) continue;
        --deg[x];
        if (!mark[x]) {
          mark[x] = true;
          touched.push_back(x);
        }
        for (Vertex y : g.neighbors(x)) {
          if (alive[y] && !mark[y]) {
            mark[y] = true;
            touched.push_back(y);
          }
        }
      }
    }
    for (Vertex y : touched) {
      mark[y] = false;
      nbr_deg[y] = 0;
      for (Vertex z : g.neighbors(y)) {
        if (alive[z]) nbr_deg[y] += deg[z];
      }
    }
  }

  ensure(is_independent(g, chosen), "shearer set is not independent");
  const Quantity target =
      Quantity::real(independence_ratio(Quantity(g.average_degree()).to_real())) * count(n);
  ensure(target.at_most(chosen.size()),
         "shearer set of size " + std::to_string(chosen.size()) + " below f(d)·n = " + target.str());
  return chosen;
}

namespace {

std::optional<std::vector<std::size_t>> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> side(n, kUnset);
  std::queue<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != kUnset) continue;
    side[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == kUnset) {
          side[w] = 1 - side[v];
          queue.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::vector<std::size_t> greedy_colouring(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> colour(n, kUnset);
  std::vector<bool> used;
  for (Vertex v : order) {
    used.assign(g.degree(v) + 1, false);
    for (Vertex w : g.neighbors(v)) {
      if (colour[w] != kUnset && colour[w] < used.size()) used[colour[w]] = true;
    }
    colour[v] = static_cast<std::size_t>(std::find(used.begin(), used.end(), false) - used.begin());
  }
  return colour;
}

std::vector<Vertex> smallest_last_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<bool> gone(n, false);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!gone[v] && (pick == n || deg[v] < deg[pick])) pick = v;
    }
    gone[pick] = true;
    order.push_back(pick);
    for (Vertex w : g.neighbors(pick)) {
      if (!gone[w]) --deg[w];
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

std::size_t colours_used(const std::vector<std::size_t>& colouring) {
  return colouring.empty() ? 0 : *std::max_element(colouring.begin(), colouring.end()) + 1;
}

}  // namespace

std::optional<std::vector<std::size_t>> colour(const Graph& g, std::size_t k) {
  if (k == 0) return g.order() == 0 ? std::optional(std::vector<std::size_t>{}) : std::nullopt;
  if (k == 1) {
    if (g.edge_count() != 0) return std::nullopt;
    return std::vector<std::size_t>(g.order(), 0);
  }
  if (k == 2) return bipartition(g);

  std::vector<Vertex> by_degree(g.order());
  std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  auto colouring = greedy_colouring(g, by_degree);
  if (colours_used(colouring) <= k) return colouring;
  colouring = greedy_colouring(g, smallest_last_order(g));
  if (colours_used(colouring) <= k) return colouring;
  return std::nullopt;
}

VertexSet chromatic_independent_set(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  auto colouring = colour(g, k);
  if (!colouring) {
    throw PreconditionError(Precondition::colouring_failed,
                            "no proper colouring with " + std::to_string(k) + " colours found");
  }
  VertexSet best(n);
  if (k == 2) {
    // Each component can be flipped independently; keep its larger side.
    for (const auto& comp : components(g)) {
      VertexSet sides[2] = {VertexSet(n), VertexSet(n)};
      for (Vertex v : comp) sides[(*colouring)[v]].insert(v);
      best |= sides[1].size() > sides[0].size() ? sides[1] : sides[0];
    }
  } else {
    std::vector<VertexSet> classes(std::max<std::size_t>(colours_used(*colouring), 1), VertexSet(n));
    for (Vertex v = 0; v < n; ++v) classes[(*colouring)[v]].insert(v);
    for (const auto& cls : classes) {
      if (cls.size() > best.size()) best = cls;
    }
  }
  ensure(is_independent(g, best), "colour class is not independent");
  ensure(k * best.size() >= n, "largest colour class below n/k");
  return best;
}

VertexSet chromatic_independent_set(const Graph& g, std::size_t k, const VertexSet& subset) {
  const std::size_t n = g.order();
  auto colouring = colour(g, k);
  if (!colouring) {
    throw PreconditionError(Precondition::colouring_failed,
                            "no proper colouring with " + std::to_string(k) + " colours found");
  }
  std::vector<VertexSet> classes(std::max<std::size_t>(colours_used(*colouring), 1), VertexSet(n));
  for (Vertex v : subset) classes[(*colouring)[v]].insert(v);
  VertexSet best(n);
  for (const auto& cls : classes) {
    if (cls.size() > best.size()) best = cls;
  }
  ensure(is_independent(g, best), "colour class is not independent");
  ensure(k * best.size() >= subset.size(), "largest colour class below |subset|/k");
  return best;
}

GoodSetParts good_independent_set_parts(const Graph& g, const VertexSet& y,
                                        const FractionProvider& provider) {
  const std::size_t n = g.order();
  if (find_triangle(g)) throw PreconditionError(Precondition::has_triangle);
  if (!is_identifiable(g)) throw PreconditionError(Precondition::not_identifiable);
  const auto twins = false_twin_classes(g);
  if (y.intersects(twins.with_twin)) {
    throw PreconditionError(Precondition::false_twin_in_y,
                            "vertex " + std::to_string((y & twins.with_twin).front()));
  }
  if (provider.kind() == FractionProvider::Kind::shearer && g.max_degree() < 3) {
    throw PreconditionError(Precondition::max_degree_below_3);
  }
  const Quantity guaranteed = provider.guaranteed_fraction(g.max_degree());

  GoodSetParts parts{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
  for (Vertex v : y) {
    if (g.degree(v) == 1) parts.s1.insert(v);
  }
  for (Vertex s : parts.s1) {
    const Vertex w = g.neighbors(s).front();
    // Two degree-1 vertices of Y can neither be adjacent (isolated edge) nor
    // share their neighbour (false twins), so they are at distance >= 3.
    ensure(!parts.s1.contains(w) && (g.open_neighborhood(w) & parts.s1).size() == 1,
           "degree-1 vertices of Y closer than distance 3");
    parts.t1.insert(s);
    parts.t1.insert(w);
    const auto around = g.neighbors(w);
    const auto other = std::find_if(around.begin(), around.end(), [&](Vertex x) { return x != s; });
    ensure(other != around.end(), "degree-1 vertex on an isolated edge");
    parts.t1.insert(*other);
  }
  parts.y1 = parts.t1 & y;
  parts.y2 = y - parts.y1;
  parts.s2 = parts.y2.empty() ? VertexSet(n) : provider.independent_set(g, parts.y2);
  parts.s = parts.s1 | parts.s2;

  ensure(is_independent(g, parts.s), "good independent set is not independent");
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) != 1) continue;
    VertexSet second(n);
    for (Vertex w : g.neighbors(u)) second |= g.open_neighborhood(w);
    second -= closed_ball(g, u);
    ensure(!(second - parts.s).empty(),
           "degree-1 vertex " + std::to_string(u) + " has every distance-2 vertex inside S");
  }
  const Quantity target = guaranteed * count(y.size());
  ensure(target.at_most(parts.s.size()), "good independent set of size " +
                                             std::to_string(parts.s.size()) + " below f'(Δ)|Y| = " +
                                             target.str());
  return parts;
}

VertexSet good_independent_set(const Graph& g, const VertexSet& y, const FractionProvider& provider) {
  return good_independent_set_parts(g, y, provider).s;
}

}  // namespace idcode::indep
