#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sunfactor/errors.hpp"
#include "sunfactor/graph.hpp"

namespace sunfactor {
namespace gen {

namespace detail {
inline void require_positive(int value, const char* what) {
  if (value <= 0) throw InputError(std::string("parameter ") + what + " must be positive");
}
}  // namespace detail

inline Graph complete(int n) {
  if (n < 0) throw InputError("parameter n must be nonnegative");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return Graph::from_edge_list(n, pairs);
}

inline Graph empty(int n) { return Graph(n); }

inline Graph path(int n) {
  detail::require_positive(n, "n");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, pairs);
}

inline Graph cycle(int n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, pairs);
}

// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  detail::require_positive(a, "a");
  detail::require_positive(b, "b");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) pairs.emplace_back(i, a + j);
  return Graph::from_edge_list(a + b, pairs);
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(e.u, e.v);
  for (const auto& e : h.edges()) pairs.emplace_back(g.order() + e.u, g.order() + e.v);
  return Graph::from_edge_list(g.order() + h.order(), pairs);
}

inline Graph disjoint_copies(const Graph& g, int copies) {
  detail::require_positive(copies, "copies");
  Graph out = g;
  for (int i = 1; i < copies; ++i) out = disjoint_union(out, g);
  return out;
}

// g ∨ h: disjoint union plus every edge between the two parts; g occupies the low ids.
inline Graph join(const Graph& g, const Graph& h) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(e.u, e.v);
  for (const auto& e : h.edges()) pairs.emplace_back(g.order() + e.u, g.order() + e.v);
  for (Vertex i = 0; i < g.order(); ++i)
    for (Vertex j = 0; j < h.order(); ++j) pairs.emplace_back(i, g.order() + j);
  return Graph::from_edge_list(g.order() + h.order(), pairs);
}

// K_{l+1} ∨ 3K_2. The join part is {0..l}.
inline Graph remark1(int l) {
  detail::require_positive(l, "l");
  return join(complete(l + 1), disjoint_copies(complete(2), 3));
}

// K_{2m+1} ∨ (3m+3)K_2. The join part is {0..2m}.
inline Graph remark2(int m) {
  detail::require_positive(m, "m");
  return join(complete(2 * m + 1), disjoint_copies(complete(2), 3 * m + 3));
}

// Core H on {0..h-1}, pendant h+i attached to core vertex i.
inline Graph big_sun_on_core(const Graph& core) {
  const int h = core.order();
  detail::require_positive(h, "core order");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : core.edges()) pairs.emplace_back(e.u, e.v);
  for (Vertex i = 0; i < h; ++i) pairs.emplace_back(i, h + i);
  return Graph::from_edge_list(2 * h, pairs);
}

inline Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(i, i + 5);
    pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edge_list(10, pairs);
}

}  // namespace gen

// Parameters for the named families; each family reads only the fields it needs.
struct FamilyParams {
  int n = 0;
  int a = 0;
  int b = 0;
  int k = 0;
  int l = 0;
  int m = 0;
  std::string core = "complete";  // big_sun_on_core: complete | cycle
};

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"complete", "cycle",  "path",    "complete_bipartite",
                                                 "disjoint_copies", "join", "remark1", "remark2",
                                                 "big_sun_on_core"};
  return names;
}

// complete(n), cycle(n), path(n), complete_bipartite(a,b), disjoint_copies(k copies of K_n),
// join(K_a ∨ k·K_b), remark1(l), remark2(m), big_sun_on_core(core=complete|cycle, n).
inline Graph generate_family(std::string_view family, const FamilyParams& p) {
  using gen::detail::require_positive;
  if (family == "complete") {
    require_positive(p.n, "n");
    return gen::complete(p.n);
  }
  if (family == "cycle") {
    require_positive(p.n, "n");
    return gen::cycle(p.n);
  }
  if (family == "path") return gen::path(p.n);
  if (family == "complete_bipartite") return gen::complete_bipartite(p.a, p.b);
  if (family == "disjoint_copies") {
    require_positive(p.n, "n");
    return gen::disjoint_copies(gen::complete(p.n), p.k);
  }
  if (family == "join") {
    require_positive(p.a, "a");
    require_positive(p.b, "b");
    return gen::join(gen::complete(p.a), gen::disjoint_copies(gen::complete(p.b), p.k));
  }
  if (family == "remark1") return gen::remark1(p.l);
  if (family == "remark2") return gen::remark2(p.m);
  if (family == "big_sun_on_core") {
    require_positive(p.n, "n");
    if (p.core == "complete") return gen::big_sun_on_core(gen::complete(p.n));
    if (p.core == "cycle") return gen::big_sun_on_core(gen::cycle(p.n));
    throw InputError("unknown core '" + p.core + "' (expected complete or cycle)");
  }
  throw InputError("unknown family '" + std::string(family) + "'");
}

}  // namespace sunfactor
