#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "sunfactor/corpus.hpp"
#include "sunfactor/graph6.hpp"
#include "sunfactor/robustness.hpp"

namespace sunfactor {

struct HuntReport {
  std::string corpus;
  Theorem theorem = Theorem::T2;
  int param = 0;
  std::size_t graphs = 0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  std::size_t hypotheses_held = 0;
  std::size_t conclusion_held = 0;
  std::vector<std::string> counterexamples;  // graph6, in corpus order

  // Associative; merging partial reports in index order gives the sequential result.
  void merge(const HuntReport& other) {
    graphs += other.graphs;
    evaluated += other.evaluated;
    skipped += other.skipped;
    hypotheses_held += other.hypotheses_held;
    conclusion_held += other.conclusion_held;
    counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
  }
};

struct HuntOptions {
  unsigned jobs = 1;
  RobustnessOptions robustness;
  ExactOptions exact;
  // Called periodically from the calling thread with (graphs done, total).
  std::function<void(std::size_t, std::size_t)> progress;
};

namespace detail {

inline HuntReport hunt_range(const Corpus& corpus, std::size_t begin, std::size_t end, Theorem theorem, int param,
                             const HuntOptions& options, std::atomic<std::size_t>& done) {
  HuntReport part;
  for (std::size_t i = begin; i < end; ++i) {
    Graph g = corpus.at(i);
    ++part.graphs;
    try {
      TheoremVerdict v = check_theorem(g, theorem, param, options.robustness, options.exact);
      ++part.evaluated;
      if (v.hypotheses_hold) ++part.hypotheses_held;
      if (v.conclusion_holds) ++part.conclusion_held;
      if (v.is_counterexample) part.counterexamples.push_back(to_graph6(g));
    } catch (const BudgetExceeded&) {
      ++part.skipped;
    }
    done.fetch_add(1, std::memory_order_relaxed);
  }
  return part;
}

}  // namespace detail

// Runs check_theorem over every corpus graph; budget overruns are counted as skips.
inline HuntReport hunt(const Corpus& corpus, Theorem theorem, int param, const HuntOptions& options = {}) {
  if (param < 1) throw InputError("theorem parameters l, m must be >= 1");
  const std::size_t total = corpus.size();
  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(options.jobs, std::max<std::size_t>(total, 1)));
  std::atomic<std::size_t> done{0};
  std::vector<std::future<HuntReport>> parts;
  for (std::size_t j = 0; j < jobs; ++j) {
    std::size_t begin = total * j / jobs;
    std::size_t end = total * (j + 1) / jobs;
    parts.push_back(std::async(std::launch::async, [&, begin, end] {
      return detail::hunt_range(corpus, begin, end, theorem, param, options, done);
    }));
  }
  HuntReport report;
  report.corpus = describe(corpus.spec());
  report.theorem = theorem;
  report.param = param;
  for (auto& part : parts) {
    if (options.progress)
      while (part.wait_for(std::chrono::milliseconds(500)) != std::future_status::ready)
        options.progress(done.load(), total);
    report.merge(part.get());
  }
  if (options.progress) options.progress(done.load(), total);
  return report;
}

}  // namespace sunfactor
