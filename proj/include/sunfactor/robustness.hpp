#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sunfactor/connectivity.hpp"
#include "sunfactor/errors.hpp"
#include "sunfactor/graph.hpp"
#include "sunfactor/path_factor.hpp"
#include "sunfactor/sun.hpp"

namespace sunfactor {

// sigma_k(G): least degree sum over independent k-sets; absent value means +infinity.
struct SigmaValue {
  std::optional<long long> value;
  std::optional<VertexSet> witness;

  bool is_infinite() const { return !value.has_value(); }
};

inline SigmaValue sigma_k(const Graph& g, int k) {
  if (k < 1) throw InputError("sigma_k needs k >= 1");
  const int n = g.order();
  SigmaValue best;
  std::vector<Vertex> current;
  std::vector<Vertex> best_set;
  long long best_sum = 0;
  auto search = [&](auto&& self, Vertex next, long long sum) -> void {
    if (best.value && sum >= best_sum) return;
    if (static_cast<int>(current.size()) == k) {
      best.value = sum;
      best_sum = sum;
      best_set = current;
      return;
    }
    for (Vertex v = next; v <= n - (k - static_cast<int>(current.size())); ++v) {
      bool independent = true;
      for (Vertex u : current)
        if (g.has_edge(u, v)) {
          independent = false;
          break;
        }
      if (!independent) continue;
      current.push_back(v);
      self(self, v + 1, sum + g.degree(v));
      current.pop_back();
    }
  };
  search(search, 0, 0);
  if (best.value) best.witness = VertexSet::from_members(n, best_set);
  return best;
}

enum class Property { Critical, Deleted };

inline const char* to_string(Property p) { return p == Property::Critical ? "critical" : "deleted"; }

// One failing deletion, with an obstruction for the reduced graph in parent-graph ids.
struct RobustnessFailure {
  VertexSet removed_vertices;  // Critical
  EdgeSet removed_edges;       // Deleted
  Obstruction obstruction;
};

struct RobustnessVerdict {
  Property property = Property::Critical;
  int param = 0;
  bool holds = true;
  std::size_t checked = 0;
  std::vector<RobustnessFailure> failures;  // first failure only, unless list_all
};

struct RobustnessOptions {
  std::size_t budget = 1'000'000;  // maximum reduced-graph checks per call
  bool list_all = false;
  PathFactorOptions path;
};

namespace detail {

inline std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double value = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    value = value * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (value > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(value + 0.5L);
}

inline void check_budget(std::size_t n, std::size_t k, const RobustnessOptions& options, const char* what) {
  if (binomial_capped(n, k, options.budget) > options.budget)
    throw BudgetExceeded(std::string(what) + ": more than " + std::to_string(options.budget) +
                         " deletions to check");
}

}  // namespace detail

// (P>=3, l)-factor critical: G - V' has a P>=3-factor for every V' with |V'| = l.
// l > n is vacuously true; l = 0 is plain existence.
inline RobustnessVerdict is_critical(const Graph& g, int l, const RobustnessOptions& options = {}) {
  if (l < 0) throw InputError("l must be nonnegative");
  RobustnessVerdict verdict{Property::Critical, l, true, 0, {}};
  const int n = g.order();
  if (l > n) return verdict;
  detail::check_budget(static_cast<std::size_t>(n), static_cast<std::size_t>(l), options, "is_critical");
  if (n <= options.path.criterion_max_order && g.mask_capable()) {
    // X obstructs G - V' iff Y = V' + X has sun(G - Y) > 2(|Y| - l). Sets Y are swept by size,
    // then lexicographically; for sets sharing V' that is also the order of Y - V', so the
    // first candidate containing V' is the obstruction the sweep on G - V' would report.
    std::vector<std::uint64_t> candidates;
    std::vector<int> suns_at;
    detail::SunCounter base(g);
    for (int k = 0; 3 * k < n - l; ++k)
      detail::for_each_combination(n, l + k, [&](std::uint64_t y, std::span<const int>) {
        const int suns = base.sun_count(g.all_mask() & ~y);
        if (suns > 2 * k) {
          candidates.push_back(y);
          suns_at.push_back(suns);
        }
        return true;
      });
    detail::for_each_combination(n, l, [&](std::uint64_t removed_mask, std::span<const int>) {
      ++verdict.checked;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if ((candidates[i] & removed_mask) != removed_mask) continue;
        verdict.holds = false;
        verdict.failures.push_back({VertexSet::from_mask(n, removed_mask), {},
                                    Obstruction{VertexSet::from_mask(n, candidates[i] & ~removed_mask), suns_at[i]}});
        return options.list_all;
      }
      return true;
    });
    return verdict;
  }
  detail::for_each_combination(n, l, [&](std::uint64_t, std::span<const int> idx) {
    ++verdict.checked;
    VertexSet removed(n);
    for (int v : idx) removed.insert(v);
    Subgraph reduced = delete_vertices(g, removed);
    if (find_p3_factor(reduced.graph, options.path)) return true;
    auto local = kaneko_violation(reduced.graph, options.path);
    if (!local) throw std::logic_error("path factor search and sun criterion disagree");
    verdict.holds = false;
    verdict.failures.push_back({removed, {}, Obstruction{reduced.lift(local->x), local->sun_count}});
    return options.list_all;
  });
  return verdict;
}

// (P>=3, m)-factor deleted: G - E' has a P>=3-factor for every E' with |E'| = m.
// m > |E| is vacuously true; m = 0 is plain existence.
inline RobustnessVerdict is_deleted(const Graph& g, int m, const RobustnessOptions& options = {}) {
  if (m < 0) throw InputError("m must be nonnegative");
  RobustnessVerdict verdict{Property::Deleted, m, true, 0, {}};
  const auto edges = g.edges();
  const int count = static_cast<int>(edges.size());
  if (m > count) return verdict;
  detail::check_budget(static_cast<std::size_t>(count), static_cast<std::size_t>(m), options, "is_deleted");
  const int n = g.order();
  if (n <= options.path.criterion_max_order && g.mask_capable()) {
    // Deleting one edge raises sun(G - X) by at most 2 (it splits at most one component), so
    // only sets X with sun(G - X) + 2m > 2|X| can obstruct any G - E'. Testing those, in sweep
    // order, yields exactly the obstruction the full sweep on G - E' would report.
    std::vector<std::uint64_t> candidates;
    detail::SunCounter base(g);
    for (int k = 0; 3 * k < n; ++k)
      detail::for_each_combination(n, k, [&](std::uint64_t x, std::span<const int>) {
        if (base.sun_count(g.all_mask() & ~x) + 2 * m > 2 * k) candidates.push_back(x);
        return true;
      });
    detail::for_each_combination(count, m, [&](std::uint64_t, std::span<const int> idx) {
      ++verdict.checked;
      EdgeSet removed;
      for (int i : idx) removed.push_back(edges[static_cast<std::size_t>(i)]);
      Graph reduced = delete_edges(g, removed);
      detail::SunCounter counter(reduced);
      for (std::uint64_t x : candidates) {
        const int suns = counter.sun_count(reduced.all_mask() & ~x);
        if (suns > 2 * std::popcount(x)) {
          verdict.holds = false;
          verdict.failures.push_back({VertexSet(n), removed, Obstruction{VertexSet::from_mask(n, x), suns}});
          return options.list_all;
        }
      }
      return true;
    });
    return verdict;
  }
  detail::for_each_combination(count, m, [&](std::uint64_t, std::span<const int> idx) {
    ++verdict.checked;
    EdgeSet removed;
    for (int i : idx) removed.push_back(edges[static_cast<std::size_t>(i)]);
    Graph reduced = delete_edges(g, removed);
    if (find_p3_factor(reduced, options.path)) return true;
    auto obstruction = kaneko_violation(reduced, options.path);
    if (!obstruction) throw std::logic_error("path factor search and sun criterion disagree");
    verdict.holds = false;
    verdict.failures.push_back({VertexSet(g.order()), removed, *obstruction});
    return options.list_all;
  });
  return verdict;
}

// The graph left after a failure's deletion, and the obstruction in its coordinates.
inline std::pair<Graph, Obstruction> reduce(const Graph& g, Property property, const RobustnessFailure& failure) {
  if (property == Property::Deleted) return {delete_edges(g, failure.removed_edges), failure.obstruction};
  Subgraph sub = delete_vertices(g, failure.removed_vertices);
  VertexSet local(sub.graph.order());
  for (Vertex v : failure.obstruction.x.members()) {
    Vertex mapped = sub.from_parent.at(static_cast<std::size_t>(v));
    if (mapped < 0) throw InputError("obstruction uses a deleted vertex");
    local.insert(mapped);
  }
  return {std::move(sub.graph), Obstruction{local, failure.obstruction.sun_count}};
}

enum class Theorem { T2, T3, T4, T5 };

inline const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::T4: return "T4";
    case Theorem::T5: return "T5";
  }
  return "?";
}

inline Theorem parse_theorem(std::string_view name) {
  if (name == "T2") return Theorem::T2;
  if (name == "T3") return Theorem::T3;
  if (name == "T4") return Theorem::T4;
  if (name == "T5") return Theorem::T5;
  throw InputError("unknown theorem '" + std::string(name) + "' (expected T2..T5)");
}

// T2, T3 speak about l-vertex deletion; T4, T5 about m-edge deletion.
inline Property property_of(Theorem t) {
  return (t == Theorem::T2 || t == Theorem::T3) ? Property::Critical : Property::Deleted;
}

inline bool uses_toughness(Theorem t) { return t == Theorem::T2 || t == Theorem::T4; }

struct TheoremVerdict {
  Theorem theorem = Theorem::T2;
  int param = 0;

  int kappa = 0;
  int kappa_required = 0;
  bool kappa_holds = false;

  // T2 / T4: strict (T2) or non-strict (T4) bound on s(G).
  std::optional<ToughnessResult> toughness;
  std::optional<Rational> toughness_threshold;
  bool toughness_strict = false;
  bool toughness_holds = false;

  // T3 / T5: sigma_3(G) >= n + 2·param. Needs an independent triple; otherwise unmet.
  std::optional<SigmaValue> sigma3;
  long long sigma_required = 0;
  bool sigma_holds = false;

  bool hypotheses_hold = false;
  bool conclusion_holds = false;
  bool is_counterexample = false;
  RobustnessVerdict conclusion;
};

// Evaluates one theorem on one graph: every hypothesis exactly, and the conclusion by
// exhaustive deletion.
inline TheoremVerdict check_theorem(const Graph& g, Theorem theorem, int param, const RobustnessOptions& options = {},
                                    const ExactOptions& exact = {}) {
  if (param < 1) throw InputError("theorem parameters l, m must be >= 1");
  if (g.order() == 0) throw InputError("theorem evaluation needs a nonempty graph");
  TheoremVerdict v;
  v.theorem = theorem;
  v.param = param;
  const int n = g.order();
  v.kappa = vertex_connectivity(g);
  switch (theorem) {
    case Theorem::T2: v.kappa_required = param + 2; break;
    case Theorem::T3: v.kappa_required = param + 1; break;
    case Theorem::T4:
    case Theorem::T5: v.kappa_required = 2 * param + 1; break;
  }
  v.kappa_holds = v.kappa >= v.kappa_required;

  bool bound_holds = false;
  if (uses_toughness(theorem)) {
    v.toughness = sun_toughness(g, exact);
    if (theorem == Theorem::T2) {
      v.toughness_threshold = Rational(param + 1, 3);
      v.toughness_strict = true;
      v.toughness_holds = v.toughness->is_infinite() || *v.toughness->value > *v.toughness_threshold;
    } else {
      v.toughness_threshold = Rational(param + 1, param + 2);
      v.toughness_strict = false;
      v.toughness_holds = v.toughness->is_infinite() || *v.toughness->value >= *v.toughness_threshold;
    }
    bound_holds = v.toughness_holds;
  } else {
    v.sigma3 = sigma_k(g, 3);
    v.sigma_required = static_cast<long long>(n) + 2LL * param;
    v.sigma_holds = !v.sigma3->is_infinite() && *v.sigma3->value >= v.sigma_required;
    bound_holds = v.sigma_holds;
  }
  v.hypotheses_hold = v.kappa_holds && bound_holds;

  v.conclusion = property_of(theorem) == Property::Critical ? is_critical(g, param, options) : is_deleted(g, param, options);
  v.conclusion_holds = v.conclusion.holds;
  v.is_counterexample = v.hypotheses_hold && !v.conclusion_holds;
  return v;
}

}  // namespace sunfactor
