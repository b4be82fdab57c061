#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "sunfactor/errors.hpp"
#include "sunfactor/graph.hpp"
#include "sunfactor/graph6.hpp"

namespace sunfactor {

// Every labeled graph on n vertices. Graph i has pair j (graph6 column order) iff bit j of i is set.
struct Exhaustive {
  int n = 0;
};

// G(n, p) samples; graph i is drawn from its own stream seeded by (seed, i).
struct Gnp {
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::size_t count = 0;
};

struct Graph6File {
  std::string path;
};

using CorpusSpec = std::variant<Exhaustive, Gnp, Graph6File>;

inline constexpr int kMaxExhaustiveOrder = 7;

// Random-access view over a corpus, so parallel harnesses can split by index range.
class Corpus {
 public:
  explicit Corpus(CorpusSpec spec) : spec_(std::move(spec)) {
    if (auto* ex = std::get_if<Exhaustive>(&spec_)) {
      if (ex->n < 0 || ex->n > kMaxExhaustiveOrder)
        throw InputError("exhaustive corpus supports 0 <= n <= " + std::to_string(kMaxExhaustiveOrder));
      pairs_ = column_pairs(ex->n);
      size_ = std::size_t{1} << pairs_.size();
    } else if (auto* g = std::get_if<Gnp>(&spec_)) {
      if (g->n < 0 || g->n > 64) throw InputError("gnp corpus supports 0 <= n <= 64");
      if (!(g->p >= 0.0 && g->p <= 1.0)) throw InputError("gnp probability must lie in [0, 1]");
      pairs_ = column_pairs(g->n);
      size_ = g->count;
    } else {
      const auto& file = std::get<Graph6File>(spec_);
      std::ifstream in(file.path);
      if (!in) throw InputError("cannot read graph6 file '" + file.path + "'");
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        loaded_.push_back(parse_graph6(line));
      }
      size_ = loaded_.size();
    }
  }

  const CorpusSpec& spec() const { return spec_; }
  std::size_t size() const { return size_; }

  Graph at(std::size_t index) const {
    if (index >= size_) throw std::out_of_range("corpus index out of range");
    if (auto* ex = std::get_if<Exhaustive>(&spec_)) {
      std::vector<std::pair<Vertex, Vertex>> chosen;
      for (std::size_t j = 0; j < pairs_.size(); ++j)
        if ((index >> j) & 1U) chosen.push_back(pairs_[j]);
      return Graph::from_edge_list(ex->n, chosen);
    }
    if (auto* g = std::get_if<Gnp>(&spec_)) {
      std::seed_seq seq{static_cast<std::uint32_t>(g->seed), static_cast<std::uint32_t>(g->seed >> 32),
                        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
      std::mt19937_64 rng(seq);
      std::vector<std::pair<Vertex, Vertex>> chosen;
      for (const auto& pr : pairs_)
        if (bernoulli(rng, g->p)) chosen.push_back(pr);
      return Graph::from_edge_list(g->n, chosen);
    }
    return loaded_[index];
  }

 private:
  static std::vector<std::pair<Vertex, Vertex>> column_pairs(int n) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i) out.emplace_back(i, j);
    return out;
  }

  // Library distributions are implementation-defined; this threshold test is not.
  static bool bernoulli(std::mt19937_64& rng, double p) {
    if (p >= 1.0) return true;
    const double scaled = std::ldexp(p, 64);
    if (scaled >= 18446744073709551615.0) return true;
    return rng() < static_cast<std::uint64_t>(scaled);
  }

  CorpusSpec spec_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<Graph> loaded_;
  std::size_t size_ = 0;
};

// Single-consumer sequential stream over a corpus.
class CorpusStream {
 public:
  explicit CorpusStream(CorpusSpec spec) : corpus_(std::move(spec)) {}

  std::optional<Graph> next() {
    if (cursor_ >= corpus_.size()) return std::nullopt;
    return corpus_.at(cursor_++);
  }

  std::size_t size() const { return corpus_.size(); }

 private:
  Corpus corpus_;
  std::size_t cursor_ = 0;
};

inline std::string describe(const CorpusSpec& spec) {
  if (auto* ex = std::get_if<Exhaustive>(&spec)) return "exhaustive(" + std::to_string(ex->n) + ")";
  if (auto* g = std::get_if<Gnp>(&spec)) {
    std::ostringstream out;
    out << "gnp(" << g->n << "," << g->p << ",seed=" << g->seed << ",count=" << g->count << ")";
    return out.str();
  }
  return "graph6_file(" + std::get<Graph6File>(spec).path + ")";
}

}  // namespace sunfactor
