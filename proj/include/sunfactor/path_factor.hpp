#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "sunfactor/errors.hpp"
#include "sunfactor/graph.hpp"
#include "sunfactor/sun.hpp"

namespace sunfactor {

// Spanning partition of V(G) into paths of order >= 3.
struct PathFactor {
  std::vector<std::vector<Vertex>> paths;

  bool validates(const Graph& g) const {
    std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
    std::size_t total = 0;
    for (const auto& p : paths) {
      if (p.size() < 3) return false;
      for (std::size_t i = 0; i < p.size(); ++i) {
        Vertex v = p[i];
        if (v < 0 || v >= g.order() || covered[static_cast<std::size_t>(v)]) return false;
        covered[static_cast<std::size_t>(v)] = 1;
        if (i > 0 && !g.has_edge(p[i - 1], v)) return false;
      }
      total += p.size();
    }
    return total == static_cast<std::size_t>(g.order());
  }
};

// A set X with sun(G - X) > 2|X|; proves that G has no P>=3-factor.
struct Obstruction {
  VertexSet x;
  int sun_count = 0;

  bool validates(const Graph& g) const {
    if (x.universe() != g.order()) return false;
    const int recomputed = sunfactor::sun_count(delete_vertices(g, x).graph);
    return recomputed == sun_count && sun_count > 2 * x.size();
  }

  bool operator==(const Obstruction&) const = default;
};

using Certificate = std::variant<PathFactor, Obstruction>;

struct PathFactorOptions {
  int criterion_max_order = 20;  // subset sweep of the sun criterion
  int search_max_order = 40;     // constructive backtracking
};

// Smallest X (then lexicographically first) with sun(G - X) > 2|X|, if any.
inline std::optional<Obstruction> kaneko_violation(const Graph& g, const PathFactorOptions& options = {}) {
  const int n = g.order();
  if (n > options.criterion_max_order || !g.mask_capable())
    throw BudgetExceeded("sun criterion sweep limited to n <= " + std::to_string(options.criterion_max_order));
  detail::SunCounter counter(g);
  const std::uint64_t all = g.all_mask();
  std::optional<Obstruction> found;
  // sun(G - X) <= n - |X|, so a violation needs n - k > 2k.
  for (int k = 0; 3 * k < n && !found; ++k) {
    detail::for_each_combination(n, k, [&](std::uint64_t x, std::span<const int>) {
      const int suns = counter.sun_count(all & ~x);
      if (suns > 2 * k) {
        found = Obstruction{VertexSet::from_mask(n, x), suns};
        return false;
      }
      return true;
    });
  }
  return found;
}

// Sun criterion decision: true iff no violating set exists.
inline bool has_p3_factor(const Graph& g, const PathFactorOptions& options = {}) {
  return !kaneko_violation(g, options).has_value();
}

namespace detail {

// Backtracking over paths of order 3, 4, 5 only: a path of order p >= 6 splits into a
// P3 and a path of order p - 3 >= 3, so nothing is lost. Components are solved
// independently and failed components are memoized by vertex mask.
class PathFactorSearch {
 public:
  explicit PathFactorSearch(const Graph& g) : g_(g) {}

  std::optional<PathFactor> run() {
    if (!solve(g_.all_mask())) return std::nullopt;
    return PathFactor{chosen_};
  }

 private:
  bool solve(std::uint64_t open) {
    const std::size_t mark = chosen_.size();
    for (std::uint64_t comp : component_masks(g_, open)) {
      if (!solve_connected(comp)) {
        chosen_.resize(mark);
        return false;
      }
    }
    return true;
  }

  bool solve_connected(std::uint64_t comp) {
    if (std::popcount(comp) < 3) return false;
    if (dead_.contains(comp)) return false;
    const Vertex start = most_constrained(comp);
    if (start < 0) {
      dead_.insert(comp);
      return false;
    }
    for (int order = 3; order <= 5; ++order) {
      if (std::popcount(comp) < order) break;
      bool solved = false;
      for_each_path_through(start, comp, order, [&](const std::vector<Vertex>& path, std::uint64_t used) {
        chosen_.push_back(path);
        if (solve(comp & ~used)) {
          solved = true;
          return false;
        }
        chosen_.pop_back();
        return true;
      });
      if (solved) return true;
    }
    dead_.insert(comp);
    return false;
  }

  // Branch vertex: minimum degree inside `comp`, ties to the lowest id. Returns -1 when some
  // vertex has three or more degree-1 neighbours, since a path through it covers at most two.
  Vertex most_constrained(std::uint64_t comp) const {
    Vertex best = -1;
    int best_degree = 0;
    std::uint64_t leaves = 0;
    for (std::uint64_t m = comp; m; m &= m - 1) {
      const Vertex v = lowest(m);
      const int d = std::popcount(g_.neighbor_mask(v) & comp);
      if (d == 1) leaves |= bit(v);
      if (best < 0 || d < best_degree) {
        best = v;
        best_degree = d;
      }
    }
    for (std::uint64_t m = comp; m; m &= m - 1)
      if (std::popcount(g_.neighbor_mask(lowest(m)) & leaves) > 2) return -1;
    return best;
  }

  // Simple paths of the given order inside `allowed` that contain `v`, each reported once
  // (oriented so the first vertex is smaller than the last).
  template <typename Visit>
  void for_each_path_through(Vertex v, std::uint64_t allowed, int order, Visit&& visit) {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
    bool stop = false;
    for (int left_len = 0; left_len < order && !stop; ++left_len) {
      const int right_len = order - 1 - left_len;
      auto extend_right = [&](auto&& self, Vertex tail, std::uint64_t used) -> void {
        if (stop) return;
        if (static_cast<int>(right.size()) == right_len) {
          std::vector<Vertex> path(left.rbegin(), left.rend());
          path.push_back(v);
          path.insert(path.end(), right.begin(), right.end());
          if (path.front() < path.back() && !visit(path, used)) stop = true;
          return;
        }
        for (std::uint64_t m = g_.neighbor_mask(tail) & allowed & ~used; m && !stop; m &= m - 1) {
          Vertex w = lowest(m);
          right.push_back(w);
          self(self, w, used | bit(w));
          right.pop_back();
        }
      };
      auto extend_left = [&](auto&& self, Vertex tail, std::uint64_t used) -> void {
        if (stop) return;
        if (static_cast<int>(left.size()) == left_len) {
          extend_right(extend_right, v, used);
          return;
        }
        for (std::uint64_t m = g_.neighbor_mask(tail) & allowed & ~used; m && !stop; m &= m - 1) {
          Vertex w = lowest(m);
          left.push_back(w);
          self(self, w, used | bit(w));
          left.pop_back();
        }
      };
      extend_left(extend_left, v, bit(v));
    }
  }

  const Graph& g_;
  std::vector<std::vector<Vertex>> chosen_;
  std::unordered_set<std::uint64_t> dead_;
};

}  // namespace detail

// Constructive decision: a P>=3-factor if one exists. n = 0 yields the empty factor.
inline std::optional<PathFactor> find_p3_factor(const Graph& g, const PathFactorOptions& options = {}) {
  if (g.order() > options.search_max_order || !g.mask_capable())
    throw BudgetExceeded("path factor search limited to n <= " + std::to_string(options.search_max_order));
  return detail::PathFactorSearch(g).run();
}

// Exactly one certificate: a path factor, or a minimum-size obstruction.
inline Certificate certify(const Graph& g, const PathFactorOptions& options = {}) {
  if (g.order() > options.criterion_max_order)
    throw BudgetExceeded("certify limited to n <= " + std::to_string(options.criterion_max_order));
  if (auto factor = find_p3_factor(g, options)) return *std::move(factor);
  if (auto obstruction = kaneko_violation(g, options)) return *std::move(obstruction);
  throw std::logic_error("path factor search and sun criterion disagree");
}

inline bool validates(const Certificate& cert, const Graph& g) {
  return std::visit([&](const auto& c) { return c.validates(g); }, cert);
}

}  // namespace sunfactor
