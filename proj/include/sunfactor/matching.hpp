#pragma once

#include <queue>
#include <vector>

#include "sunfactor/errors.hpp"
#include "sunfactor/graph.hpp"

namespace sunfactor {

// Vertex-disjoint edges of a graph, stored as a mate array (-1 = exposed).
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Vertex> mate) : mate_(std::move(mate)) {}

  Vertex mate(Vertex v) const { return mate_.at(static_cast<std::size_t>(v)); }
  bool covers(Vertex v) const { return mate(v) >= 0; }

  std::size_t size() const {
    std::size_t matched = 0;
    for (Vertex m : mate_)
      if (m >= 0) ++matched;
    return matched / 2;
  }

  EdgeSet edges() const {
    EdgeSet out;
    for (Vertex v = 0; v < static_cast<Vertex>(mate_.size()); ++v)
      if (mate_[static_cast<std::size_t>(v)] > v) out.push_back({v, mate_[static_cast<std::size_t>(v)]});
    return out;
  }

  // Symmetric mates, every pair an edge of g.
  bool is_valid_for(const Graph& g) const {
    if (static_cast<int>(mate_.size()) != g.order()) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
      Vertex w = mate_[static_cast<std::size_t>(v)];
      if (w < 0) continue;
      if (w >= g.order() || mate_[static_cast<std::size_t>(w)] != v || !g.has_edge(v, w)) return false;
    }
    return true;
  }

 private:
  std::vector<Vertex> mate_;
};

namespace detail {

// Edmonds' blossom-shrinking augmenting path search. Roots and neighbors are scanned in
// ascending id order, so the returned matching is a pure function of the graph.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(static_cast<std::size_t>(g.order())),
        mate_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        in_tree_(n_, 0),
        in_blossom_(n_, 0) {}

  std::vector<Vertex> run() {
    for (Vertex root = 0; root < g_.order(); ++root) {
      if (mate_[idx(root)] != -1) continue;
      Vertex end = find_augmenting_path(root);
      while (end != -1) {
        Vertex pv = parent_[idx(end)];
        Vertex next = mate_[idx(pv)];
        mate_[idx(end)] = pv;
        mate_[idx(pv)] = end;
        end = next;
      }
    }
    return mate_;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex lowest_common_ancestor(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[idx(a)];
      seen[idx(a)] = 1;
      if (mate_[idx(a)] == -1) break;
      a = parent_[idx(mate_[idx(a)])];
    }
    while (true) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(mate_[idx(b)])];
    }
  }

  void mark_path(Vertex v, Vertex blossom_base, Vertex child) {
    while (base_[idx(v)] != blossom_base) {
      in_blossom_[idx(base_[idx(v)])] = 1;
      in_blossom_[idx(base_[idx(mate_[idx(v)])])] = 1;
      parent_[idx(v)] = child;
      child = mate_[idx(v)];
      v = parent_[idx(mate_[idx(v)])];
    }
  }

  // Returns the exposed endpoint of an augmenting path from root, or -1.
  Vertex find_augmenting_path(Vertex root) {
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<Vertex>(i);
    in_tree_[idx(root)] = 1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to) continue;
        if (to == root || (mate_[idx(to)] != -1 && parent_[idx(mate_[idx(to)])] != -1)) {
          // Odd cycle: contract the blossom.
          Vertex current_base = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, current_base, to);
          mark_path(to, current_base, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (!in_blossom_[idx(base_[i])]) continue;
            base_[i] = current_base;
            if (!in_tree_[i]) {
              in_tree_[i] = 1;
              queue.push(static_cast<Vertex>(i));
            }
          }
        } else if (parent_[idx(to)] == -1) {
          parent_[idx(to)] = v;
          if (mate_[idx(to)] == -1) return to;
          Vertex next = mate_[idx(to)];
          in_tree_[idx(next)] = 1;
          queue.push(next);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
};

}  // namespace detail

inline Matching maximum_matching(const Graph& g) { return Matching(detail::BlossomMatcher(g).run()); }

// The graph on zero vertices has the empty perfect matching.
inline bool has_perfect_matching(const Graph& g) {
  if (g.order() % 2 != 0) return false;
  return maximum_matching(g).size() * 2 == static_cast<std::size_t>(g.order());
}

// G - v has a perfect matching for every v. K1 qualifies; even orders never do.
inline bool is_factor_critical(const Graph& g) {
  if (g.order() % 2 == 0) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet drop(g.order(), {v});
    if (!has_perfect_matching(delete_vertices(g, drop).graph)) return false;
  }
  return true;
}

inline constexpr std::size_t kMatchingOracleMaxEdges = 24;

// Exhaustive search over edge subsets (branching take/skip per edge, skipping subsets that
// are not matchings). Test oracle only.
inline Matching brute_matching_oracle(const Graph& g) {
  if (g.size() > kMatchingOracleMaxEdges) throw BudgetExceeded("matching oracle limited to 24 edges");
  const auto edges = g.edges();
  std::vector<Vertex> mate(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> best = mate;
  std::size_t best_size = 0;
  std::size_t current = 0;
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (current > best_size) {
      best_size = current;
      best = mate;
    }
    if (i == edges.size()) return;
    if (current + (edges.size() - i) <= best_size) return;
    const Edge e = edges[i];
    if (mate[static_cast<std::size_t>(e.u)] == -1 && mate[static_cast<std::size_t>(e.v)] == -1) {
      mate[static_cast<std::size_t>(e.u)] = e.v;
      mate[static_cast<std::size_t>(e.v)] = e.u;
      ++current;
      self(self, i + 1);
      --current;
      mate[static_cast<std::size_t>(e.u)] = -1;
      mate[static_cast<std::size_t>(e.v)] = -1;
    }
    self(self, i + 1);
  };
  search(search, 0);
  return Matching(std::move(best));
}

}  // namespace sunfactor
