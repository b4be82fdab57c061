#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sunfactor/connectivity.hpp"
#include "sunfactor/graph6.hpp"
#include "sunfactor/hunt.hpp"
#include "sunfactor/path_factor.hpp"
#include "sunfactor/robustness.hpp"
#include "sunfactor/sun.hpp"

namespace sunfactor {

using json = nlohmann::ordered_json;

// JSON report fragments. Fractions are "p/q", +infinity is "inf", and a quantity whose
// computation exceeded its budget is "skipped".

inline json members_json(const VertexSet& s) { return s.members(); }

inline json edges_json(const EdgeSet& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

inline json to_json(const ToughnessResult& t) {
  if (t.is_infinite()) return {{"value", "inf"}, {"witness", nullptr}, {"sun_count_at_witness", nullptr}};
  return {{"value", to_string(*t.value)}, {"witness", members_json(*t.witness)},
          {"sun_count_at_witness", t.sun_count_at_witness}};
}

inline json to_json(const SigmaValue& s) {
  if (s.is_infinite()) return {{"value", "inf"}, {"witness", nullptr}};
  return {{"value", *s.value}, {"witness", members_json(*s.witness)}};
}

inline json to_json(const Obstruction& o) {
  return {{"type", "obstruction"}, {"X", members_json(o.x)}, {"sun_count", o.sun_count}, {"bound", 2 * o.x.size()}};
}

inline json to_json(const PathFactor& f) { return {{"type", "path_factor"}, {"paths", f.paths}}; }

inline json to_json(const Certificate& c) {
  return std::visit([](const auto& cert) { return to_json(cert); }, c);
}

inline json to_json(const RobustnessVerdict& v) {
  json failures = json::array();
  for (const auto& f : v.failures) {
    json item;
    if (v.property == Property::Critical)
      item["removed_vertices"] = members_json(f.removed_vertices);
    else
      item["removed_edges"] = edges_json(f.removed_edges);
    item["obstruction"] = to_json(f.obstruction);
    failures.push_back(std::move(item));
  }
  return {{"property", to_string(v.property)},
          {v.property == Property::Critical ? "l" : "m", v.param},
          {"holds", v.holds},
          {"checked", v.checked},
          {"failures", std::move(failures)}};
}

inline json to_json(const TheoremVerdict& v) {
  json hyp;
  hyp["kappa"] = {{"value", v.kappa}, {"required", v.kappa_required}, {"holds", v.kappa_holds}};
  if (v.toughness) {
    hyp["sun_toughness"] = {{"value", v.toughness->is_infinite() ? "inf" : to_string(*v.toughness->value)},
                            {"relation", v.toughness_strict ? ">" : ">="},
                            {"threshold", to_string(*v.toughness_threshold)},
                            {"holds", v.toughness_holds}};
  }
  if (v.sigma3) {
    hyp["sigma3"] = {{"value", v.sigma3->is_infinite() ? json("inf") : json(*v.sigma3->value)},
                     {"relation", ">="},
                     {"threshold", v.sigma_required},
                     {"holds", v.sigma_holds}};
  }
  return {{"theorem", to_string(v.theorem)},
          {property_of(v.theorem) == Property::Critical ? "l" : "m", v.param},
          {"hypotheses", std::move(hyp)},
          {"hypotheses_hold", v.hypotheses_hold},
          {"conclusion_holds", v.conclusion_holds},
          {"is_counterexample", v.is_counterexample},
          {"conclusion", to_json(v.conclusion)}};
}

inline json to_json(const HuntReport& r) {
  return {{"corpus", r.corpus},
          {"theorem", to_string(r.theorem)},
          {property_of(r.theorem) == Property::Critical ? "l" : "m", r.param},
          {"graphs", r.graphs},
          {"evaluated", r.evaluated},
          {"skipped", r.skipped},
          {"hypotheses_held", r.hypotheses_held},
          {"conclusion_held", r.conclusion_held},
          {"counterexamples", r.counterexamples.size()},
          {"counterexample_graph6", r.counterexamples}};
}

struct AnalysisOptions {
  ExactOptions exact;
  PathFactorOptions path;
  bool timing = false;
};

struct Analysis {
  json report;
  bool skipped = false;  // some quantity exceeded its budget
};

// Every quantity for one graph. Budget overruns mark the field "skipped" instead of failing.
inline Analysis analyze(const Graph& g, const AnalysisOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  Analysis out;
  json& r = out.report;
  json skipped = json::array();
  auto skip = [&](const char* field) {
    r[field] = "skipped";
    skipped.push_back(field);
    out.skipped = true;
  };

  r["input"] = {{"graph6", to_graph6(g)}};
  r["n"] = g.order();
  r["edges"] = g.size();
  r["omega"] = omega(g);
  r["kappa"] = g.order() >= 1 ? json(vertex_connectivity(g)) : json(nullptr);
  r["lambda"] = g.order() >= 2 ? json(edge_connectivity(g)) : json(nullptr);
  r["min_degree"] = g.min_degree();
  r["sun_count"] = sun_count(g);
  r["isolated_count"] = isolated_count(g);

  if (g.order() == 0) {
    r["sun_toughness"] = nullptr;
  } else {
    try {
      r["sun_toughness"] = to_json(sun_toughness(g, options.exact));
    } catch (const BudgetExceeded&) {
      skip("sun_toughness");
    }
  }
  r["sigma3"] = to_json(sigma_k(g, 3));

  try {
    std::optional<Certificate> cert;
    if (auto factor = find_p3_factor(g, options.path)) {
      cert = *std::move(factor);
    } else if (auto obstruction = kaneko_violation(g, options.path)) {
      cert = *std::move(obstruction);
    } else {
      throw std::logic_error("path factor search and sun criterion disagree");
    }
    r["has_p3_factor"] = std::holds_alternative<PathFactor>(*cert);
    r["certificate"] = to_json(*cert);
  } catch (const BudgetExceeded&) {
    skip("has_p3_factor");
    r["certificate"] = nullptr;
  }

  r["skipped"] = std::move(skipped);
  if (options.timing) {
    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    r["timing_ms"] = elapsed.count();
  }
  return out;
}

}  // namespace sunfactor
