#include "idcode/exact.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "idcode/errors.hpp"

namespace idcode::exact {

namespace {

using Mask = std::uint64_t;

void check_input(const Graph& g, std::size_t vertex_limit) {
  const std::size_t limit = std::min(vertex_limit, kHardVertexLimit);
  if (g.order() > limit) {
    throw PreconditionError(Precondition::too_many_vertices,
                            "n=" + std::to_string(g.order()) + " > limit " + std::to_string(limit));
  }
  if (auto twins = find_twins(g)) {
    throw PreconditionError(Precondition::not_identifiable,
                            "twins " + std::to_string(twins->first) + " and " +
                                std::to_string(twins->second));
  }
}

std::vector<Mask> ball_masks(const Graph& g) {
  std::vector<Mask> balls(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    balls[v] = Mask{1} << v;
    for (Vertex w : g.neighbors(v)) balls[v] |= Mask{1} << w;
  }
  return balls;
}

VertexSet to_set(Mask m, std::size_t n) {
  VertexSet s(n);
  for (; m != 0; m &= m - 1) s.insert(static_cast<Vertex>(std::countr_zero(m)));
  return s;
}

class HittingSetSearch {
 public:
  explicit HittingSetSearch(std::vector<Mask> sets) : sets_(std::move(sets)) {}

  bool solve(std::size_t budget, Mask& witness) {
    chosen_ = 0;
    return descend(0, budget, witness);
  }

  std::uint64_t explored() const { return explored_; }

 private:
  bool descend(Mask excluded, std::size_t budget, Mask& witness) {
    ++explored_;
    // Pick the unhit set with the fewest still-available elements.
    const Mask* best = nullptr;
    int best_count = 65;
    for (const Mask& s : sets_) {
      if ((s & chosen_) != 0) continue;
      const int available = std::popcount(s & ~excluded);
      if (available == 0) return false;
      if (available < best_count) {
        best_count = available;
        best = &s;
      }
    }
    if (best == nullptr) {
      witness = chosen_;
      return true;
    }
    if (budget == 0) return false;
    Mask branch = *best & ~excluded;
    Mask local_excluded = excluded;
    for (; branch != 0; branch &= branch - 1) {
      const Mask bit = branch & -branch;
      chosen_ |= bit;
      const bool found = descend(local_excluded, budget - 1, witness);
      chosen_ &= ~bit;
      if (found) return true;
      local_excluded |= bit;
    }
    return false;
  }

  std::vector<Mask> sets_;
  Mask chosen_ = 0;
  std::uint64_t explored_ = 0;
};

// Drops duplicates and any set that contains another one: hitting the
// smaller set already hits the larger.
std::vector<Mask> minimal_sets(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(),
            [](Mask a, Mask b) { return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> kept;
  for (Mask s : sets) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](Mask k) { return (k & s) == k; });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

}  // namespace

std::size_t lower_bound(std::size_t n, std::size_t delta) {
  std::size_t log_bound = 0;
  while ((std::size_t{1} << log_bound) < n + 1) ++log_bound;
  const std::size_t degree_bound = (2 * n + delta + 1) / (delta + 2);
  return std::max(log_bound, degree_bound);
}

ExactResult min_identifying_code(const Graph& g, std::size_t vertex_limit) {
  check_input(g, vertex_limit);
  const std::size_t n = g.order();
  if (n == 0) return {0, VertexSet(0), 0};

  const auto balls = ball_masks(g);
  std::vector<Mask> sets(balls.begin(), balls.end());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) sets.push_back(balls[u] ^ balls[v]);
  }
  HittingSetSearch search(minimal_sets(std::move(sets)));

  for (std::size_t k = lower_bound(n, g.max_degree()); k <= n; ++k) {
    Mask witness = 0;
    if (search.solve(k, witness)) {
      return {static_cast<std::size_t>(std::popcount(witness)), to_set(witness, n),
              search.explored()};
    }
  }
  throw InvariantViolation("identifiable graph without an identifying code");
}

ExactResult min_identifying_code_naive(const Graph& g, std::size_t vertex_limit) {
  check_input(g, vertex_limit);
  const std::size_t n = g.order();
  if (n == 0) return {0, VertexSet(0), 0};

  const auto balls = ball_masks(g);
  std::uint64_t explored = 0;
  std::vector<Mask> traces(n);
  auto identifies = [&](Mask code) {
    for (Vertex v = 0; v < n; ++v) {
      traces[v] = balls[v] & code;
      if (traces[v] == 0) return false;
    }
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (traces[u] == traces[v]) return false;
      }
    }
    return true;
  };

  const Mask universe = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // Gosper's hack walks the k-subsets in increasing numeric order.
    Mask subset = (k == 64) ? ~Mask{0} : (Mask{1} << k) - 1;
    while (true) {
      ++explored;
      if (identifies(subset)) return {k, to_set(subset, n), explored};
      const Mask low = subset & -subset;
      const Mask ripple = subset + low;
      if (ripple == 0 || (ripple & ~universe) != 0) break;
      subset = ripple | (((subset ^ ripple) >> 2) / low);
      if ((subset & ~universe) != 0) break;
    }
  }
  throw InvariantViolation("identifiable graph without an identifying code");
}

}  // namespace idcode::exact
