#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sunfactor/errors.hpp"

namespace sunfactor {

using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

using EdgeSet = std::vector<Edge>;

// Subset of the vertex universe 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

  VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet from_members(int universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  static VertexSet from_mask(int universe, std::uint64_t mask) {
    if (universe > 64) throw InputError("mask construction requires universe <= 64");
    if (universe < 64 && (mask >> universe) != 0) throw InputError("mask has bits beyond universe");
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  int universe() const { return universe_; }

  bool contains(Vertex v) const {
    if (v < 0 || v >= universe_) return false;
    return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
  }

  void insert(Vertex v) {
    check(v);
    words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  }

  void erase(Vertex v) {
    check(v);
    words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  int size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }

  bool empty() const { return size() == 0; }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < universe_; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  std::uint64_t mask() const {
    if (universe_ > 64) throw InputError("mask view requires universe <= 64");
    return words_.empty() ? 0 : words_[0];
  }

  bool operator==(const VertexSet&) const = default;

 private:
  void check(Vertex v) const {
    if (v < 0 || v >= universe_)
      throw InputError("vertex " + std::to_string(v) + " out of range for universe " +
                       std::to_string(universe_));
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw InputError("negative vertex count");
    build_masks();
  }

  // Duplicate pairs (in either orientation) collapse into one edge.
  static Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    Graph g(n);
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw InputError("endpoint out of range: (" + std::to_string(a) + "," + std::to_string(b) +
                         ") with n=" + std::to_string(n));
      if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
      edges.push_back(make_edge(a, b));
    }
    g.assign_edges(std::move(edges));
    return g;
  }

  static Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
  }

  static Graph from_edges(int n, std::span<const Edge> edges) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(edges.size());
    for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
    return from_edge_list(n, pairs);
  }

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  int degree(Vertex v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }

  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
    const auto& row = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(row.begin(), row.end(), b);
  }

  bool mask_capable() const { return n_ <= 64; }

  // Neighborhood as a bitmask; only available when order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return masks_.at(static_cast<std::size_t>(v)); }

  std::uint64_t all_mask() const {
    return n_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  int min_degree() const {
    int best = n_ == 0 ? 0 : n_;
    for (const auto& row : adj_) best = std::min(best, static_cast<int>(row.size()));
    return best;
  }

  bool is_complete() const {
    return edges_.size() == static_cast<std::size_t>(n_) * static_cast<std::size_t>(std::max(n_ - 1, 0)) / 2;
  }

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  void assign_edges(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (auto& row : adj_) row.clear();
    for (const auto& e : edges_) {
      adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
    build_masks();
  }

  void build_masks() {
    masks_.clear();
    if (n_ > 64) return;
    masks_.assign(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_) {
      masks_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
      masks_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
  }

  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> masks_;
};

// Induced subgraph together with the identifier maps between it and its parent.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // new id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> new id, or -1 when deleted

  VertexSet lift(const VertexSet& local) const {
    VertexSet out(static_cast<int>(from_parent.size()));
    for (Vertex v : local.members()) out.insert(to_parent[static_cast<std::size_t>(v)]);
    return out;
  }
};

inline Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.order()) throw InputError("vertex set universe does not match graph order");
  Subgraph sub;
  sub.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!keep.contains(v)) continue;
    sub.from_parent[static_cast<std::size_t>(v)] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : g.edges()) {
    Vertex a = sub.from_parent[static_cast<std::size_t>(e.u)];
    Vertex b = sub.from_parent[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) pairs.emplace_back(a, b);
  }
  sub.graph = Graph::from_edge_list(static_cast<int>(sub.to_parent.size()), pairs);
  return sub;
}

// G - S, with relabeling maps so certificates can be lifted back.
inline Subgraph delete_vertices(const Graph& g, const VertexSet& removed) {
  if (removed.universe() != g.order()) throw InputError("vertex set universe does not match graph order");
  VertexSet keep(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (!removed.contains(v)) keep.insert(v);
  return induced_subgraph(g, keep);
}

inline Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  return delete_vertices(g, VertexSet::from_members(g.order(), removed));
}

// G - F on the same vertex set.
inline Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop;
  drop.reserve(removed.size());
  for (const auto& e : removed) {
    Edge norm = make_edge(e.u, e.v);
    if (!g.has_edge(norm.u, norm.v))
      throw InputError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
    drop.push_back(norm);
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  std::set_difference(g.edges().begin(), g.edges().end(), drop.begin(), drop.end(), std::back_inserter(kept));
  return Graph::from_edges(g.order(), kept);
}

// Connected components, ordered by minimum vertex id.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    VertexSet comp(g.order());
    stack.push_back(root);
    seen[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (Vertex w : g.neighbors(v)) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

inline int omega(const Graph& g) { return static_cast<int>(components(g).size()); }

inline bool is_connected(const Graph& g) { return omega(g) <= 1; }

namespace detail {

inline std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

inline Vertex lowest(std::uint64_t mask) { return static_cast<Vertex>(std::countr_zero(mask)); }

// Component of `alive` containing `root`, for mask-capable graphs.
inline std::uint64_t component_mask(const Graph& g, std::uint64_t alive, Vertex root) {
  std::uint64_t comp = bit(root);
  std::uint64_t frontier = comp;
  while (frontier) {
    Vertex v = lowest(frontier);
    frontier &= frontier - 1;
    std::uint64_t fresh = g.neighbor_mask(v) & alive & ~comp;
    comp |= fresh;
    frontier |= fresh;
  }
  return comp;
}

// Components of G[alive] as bitmasks, ordered by minimum vertex id.
inline std::vector<std::uint64_t> component_masks(const Graph& g, std::uint64_t alive) {
  std::vector<std::uint64_t> out;
  while (alive) {
    std::uint64_t comp = component_mask(g, alive, lowest(alive));
    out.push_back(comp);
    alive &= ~comp;
  }
  return out;
}

inline Graph induced_by_mask(const Graph& g, std::uint64_t keep, std::vector<Vertex>* to_parent = nullptr) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  int count = 0;
  std::vector<Vertex> ids;
  for (std::uint64_t m = keep; m; m &= m - 1) {
    Vertex v = lowest(m);
    local[static_cast<std::size_t>(v)] = count++;
    ids.push_back(v);
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v : ids)
    for (std::uint64_t m = g.neighbor_mask(v) & keep; m; m &= m - 1) {
      Vertex w = lowest(m);
      if (v < w) pairs.emplace_back(local[static_cast<std::size_t>(v)], local[static_cast<std::size_t>(w)]);
    }
  if (to_parent) *to_parent = std::move(ids);
  return Graph::from_edge_list(count, pairs);
}

// Visits every k-subset of {0..n-1} in lexicographic order of sorted members. The visitor
// receives the subset as a bitmask (zero when n > 64) and as sorted indices, and returns
// false to stop early; the function returns false if stopped.
template <typename Visit>
bool for_each_combination(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    if (n <= 64)
      for (int i : idx) mask |= bit(i);
    if (!visit(mask, std::span<const int>(idx))) return false;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail
}  // namespace sunfactor
