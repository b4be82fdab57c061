#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "sunfactor/errors.hpp"
#include "sunfactor/graph.hpp"

namespace sunfactor {
namespace detail {

// Small residual network; augmenting paths by BFS. Capacities are tiny (0/1 or n) here.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  void add_arc(int from, int to, int capacity) {
    arcs_.push_back({to, capacity, head_[static_cast<std::size_t>(from)]});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[static_cast<std::size_t>(to)]});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  // Stops early once `limit` units have been pushed.
  int max_flow(int source, int sink, int limit = std::numeric_limits<int>::max()) {
    int total = 0;
    std::vector<int> via(head_.size());
    while (total < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> queue;
      queue.push(source);
      via[static_cast<std::size_t>(source)] = -2;
      while (!queue.empty() && via[static_cast<std::size_t>(sink)] == -1) {
        int v = queue.front();
        queue.pop();
        for (int a = head_[static_cast<std::size_t>(v)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
          const auto& arc = arcs_[static_cast<std::size_t>(a)];
          if (arc.capacity > 0 && via[static_cast<std::size_t>(arc.to)] == -1) {
            via[static_cast<std::size_t>(arc.to)] = a;
            queue.push(arc.to);
          }
        }
      }
      if (via[static_cast<std::size_t>(sink)] == -1) break;
      int push = std::numeric_limits<int>::max();
      for (int v = sink; v != source;) {
        int a = via[static_cast<std::size_t>(v)];
        push = std::min(push, arcs_[static_cast<std::size_t>(a)].capacity);
        v = arcs_[static_cast<std::size_t>(a ^ 1)].to;
      }
      for (int v = sink; v != source;) {
        int a = via[static_cast<std::size_t>(v)];
        arcs_[static_cast<std::size_t>(a)].capacity -= push;
        arcs_[static_cast<std::size_t>(a ^ 1)].capacity += push;
        v = arcs_[static_cast<std::size_t>(a ^ 1)].to;
      }
      total += push;
    }
    return total;
  }

 private:
  struct Arc {
    int to;
    int capacity;
    int next;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

// Maximum number of internally vertex-disjoint s-t paths for non-adjacent s, t.
inline int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  const int n = g.order();
  FlowNetwork net(2 * n);  // v_in = 2v, v_out = 2v+1
  for (Vertex v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
  for (const auto& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, n);
    net.add_arc(2 * e.v + 1, 2 * e.u, n);
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

inline int local_edge_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  FlowNetwork net(g.order());
  for (const auto& e : g.edges()) {
    net.add_arc(e.u, e.v, 1);
    net.add_arc(e.v, e.u, 1);
  }
  return net.max_flow(s, t, limit);
}

}  // namespace detail

// kappa(G): fewest vertices whose removal disconnects G; n-1 for complete graphs.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw InputError("vertex connectivity needs at least one vertex");
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;
  int best = g.min_degree();
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, detail::local_vertex_connectivity(g, s, t, best));
      if (best == 0) return 0;
    }
  return best;
}

// lambda(G): fewest edges whose removal disconnects G.
inline int edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw InputError("edge connectivity needs at least two vertices");
  int best = g.min_degree();
  for (Vertex t = 1; t < n && best > 0; ++t) best = std::min(best, detail::local_edge_connectivity(g, 0, t, best));
  return best;
}

}  // namespace sunfactor
