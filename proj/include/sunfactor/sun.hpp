#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "sunfactor/errors.hpp"
#include "sunfactor/graph.hpp"
#include "sunfactor/matching.hpp"

namespace sunfactor {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

enum class SunKind { K1, K2, BigSun };

inline const char* to_string(SunKind kind) {
  switch (kind) {
    case SunKind::K1: return "K1";
    case SunKind::K2: return "K2";
    case SunKind::BigSun: return "big_sun";
  }
  return "?";
}

// Proof that a connected graph is a sun: K1, K2, or a factor-critical core with one
// pendant per core vertex.
struct SunDecomposition {
  SunKind kind = SunKind::K1;
  VertexSet core;                            // BigSun only
  std::vector<std::pair<Vertex, Vertex>> pendants;  // (core vertex, pendant vertex), BigSun only

  // Re-checks the invariants against the component they claim to describe.
  bool validates(const Graph& c) const {
    if (kind == SunKind::K1) return c.order() == 1;
    if (kind == SunKind::K2) return c.order() == 2 && c.size() == 1;
    if (core.universe() != c.order()) return false;
    const int h = core.size();
    if (h < 3 || h % 2 == 0 || static_cast<int>(pendants.size()) != h || c.order() != 2 * h) return false;
    VertexSet seen_core(c.order());
    VertexSet seen_pendant(c.order());
    for (auto [v, u] : pendants) {
      if (!core.contains(v) || core.contains(u)) return false;
      if (seen_core.contains(v) || seen_pendant.contains(u)) return false;
      seen_core.insert(v);
      seen_pendant.insert(u);
      if (c.degree(u) != 1 || !c.has_edge(u, v)) return false;
    }
    return is_factor_critical(induced_subgraph(c, core).graph);
  }
};

namespace detail {

// Sun recognition on components of G[alive] for mask-capable graphs, with a per-instance
// cache of factor-critical cores. Not thread-safe; create one per worker.
class SunCounter {
 public:
  explicit SunCounter(const Graph& g) : g_(g) {
    if (!g.mask_capable()) throw BudgetExceeded("mask-based sun counting requires at most 64 vertices");
  }

  bool is_sun_component(std::uint64_t comp) {
    const int size = std::popcount(comp);
    if (size <= 2) return true;
    if (size % 2 != 0) return false;
    std::uint64_t pendants = 0;
    for (std::uint64_t m = comp; m; m &= m - 1) {
      Vertex v = lowest(m);
      if (std::popcount(g_.neighbor_mask(v) & comp) == 1) pendants |= bit(v);
    }
    if (std::popcount(pendants) * 2 != size) return false;
    const std::uint64_t core = comp & ~pendants;
    std::uint64_t attached = 0;
    for (std::uint64_t m = pendants; m; m &= m - 1) {
      std::uint64_t nb = g_.neighbor_mask(lowest(m)) & comp;
      if ((nb & pendants) || (attached & nb)) return false;
      attached |= nb;
    }
    if (attached != core) return false;
    return core_factor_critical(core);
  }

  int sun_count(std::uint64_t alive) {
    int count = 0;
    while (alive) {
      std::uint64_t comp = component_mask(g_, alive, lowest(alive));
      alive &= ~comp;
      if (is_sun_component(comp)) ++count;
    }
    return count;
  }

  int isolated_count(std::uint64_t alive) const {
    int count = 0;
    for (std::uint64_t m = alive; m; m &= m - 1)
      if ((g_.neighbor_mask(lowest(m)) & alive) == 0) ++count;
    return count;
  }

 private:
  bool core_factor_critical(std::uint64_t core) {
    auto it = cache_.find(core);
    if (it != cache_.end()) return it->second;
    bool result = is_factor_critical(induced_by_mask(g_, core));
    cache_.emplace(core, result);
    return result;
  }

  const Graph& g_;
  std::unordered_map<std::uint64_t, bool> cache_;
};

}  // namespace detail

// Decides whether a connected graph is a sun. Big suns are recognized through their
// degree-1 vertices: a factor-critical core of order >= 3 has minimum degree >= 2, so the
// pendants are exactly the degree-1 vertices.
inline std::optional<SunDecomposition> is_sun(const Graph& c) {
  if (c.order() == 0 || !is_connected(c)) throw InputError("is_sun expects a connected, nonempty graph");
  const int n = c.order();
  if (n == 1) return SunDecomposition{SunKind::K1, {}, {}};
  if (n == 2) return SunDecomposition{SunKind::K2, {}, {}};
  if (n % 2 != 0) return std::nullopt;

  std::vector<std::pair<Vertex, Vertex>> pendants;
  VertexSet core(n);
  for (Vertex v = 0; v < n; ++v) core.insert(v);
  for (Vertex u = 0; u < n; ++u)
    if (c.degree(u) == 1) {
      pendants.emplace_back(c.neighbors(u)[0], u);
      core.erase(u);
    }
  if (static_cast<int>(pendants.size()) * 2 != n) return std::nullopt;
  VertexSet attached(n);
  for (auto [v, u] : pendants) {
    if (!core.contains(v) || attached.contains(v)) return std::nullopt;
    attached.insert(v);
  }
  if (!(attached == core)) return std::nullopt;
  if (!is_factor_critical(induced_subgraph(c, core).graph)) return std::nullopt;
  std::sort(pendants.begin(), pendants.end());
  return SunDecomposition{SunKind::BigSun, std::move(core), std::move(pendants)};
}

// sun(G): number of components that are suns.
inline int sun_count(const Graph& g) {
  if (g.mask_capable()) return detail::SunCounter(g).sun_count(g.all_mask());
  int count = 0;
  for (const auto& comp : components(g))
    if (is_sun(induced_subgraph(g, comp).graph)) ++count;
  return count;
}

// i(G): number of isolated vertices (K1 components).
inline int isolated_count(const Graph& g) {
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) ++count;
  return count;
}

struct ExactOptions {
  int max_order = 20;
};

// s(G) with its witness. An absent value means +infinity (complete graphs).
struct ToughnessResult {
  std::optional<Rational> value;
  std::optional<VertexSet> witness;
  int sun_count_at_witness = 0;

  bool is_infinite() const { return !value.has_value(); }
};

// Exact sun toughness: min |X| / sun(G - X) over X with sun(G - X) >= 2.
// Sets are scanned by increasing size, lexicographically within a size; the first strict
// improvement wins, so the witness is the smallest, then lexicographically first, minimizer.
inline ToughnessResult sun_toughness(const Graph& g, const ExactOptions& options = {}) {
  const int n = g.order();
  if (n == 0) throw InputError("sun toughness needs at least one vertex");
  if (g.is_complete()) return {};
  if (n > options.max_order || !g.mask_capable())
    throw BudgetExceeded("sun toughness exact mode limited to n <= " + std::to_string(options.max_order));

  detail::SunCounter counter(g);
  const std::uint64_t all = g.all_mask();
  ToughnessResult best;
  std::uint64_t best_mask = 0;
  for (int k = 0; k <= n - 2; ++k) {
    // sun(G - X) <= n - k, so no set of size >= k can beat best once k / (n - k) >= best.
    if (best.value && Rational(k, n - k) >= *best.value) break;
    detail::for_each_combination(n, k, [&](std::uint64_t x, std::span<const int>) {
      const int suns = counter.sun_count(all & ~x);
      if (suns < 2) return true;
      Rational ratio(k, suns);
      if (!best.value || ratio < *best.value) {
        best.value = ratio;
        best.sun_count_at_witness = suns;
        best_mask = x;
      }
      return true;
    });
  }
  if (!best.value) throw std::logic_error("non-complete graph without a feasible toughness set");
  best.witness = VertexSet::from_mask(n, best_mask);
  return best;
}

}  // namespace sunfactor
