#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sunfactor/errors.hpp"
#include "sunfactor/graph.hpp"

namespace sunfactor {

// graph6: N(n) followed by the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed
// six bits per byte, each byte offset by 63. Short header for n <= 62, '~' + 3 bytes up to 258047.

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw InputError("graph6 encoding supports at most 258047 vertices");
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw InputError("malformed graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw InputError("malformed graph6: byte outside 63..126");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw InputError("malformed graph6: 8-byte header not supported");
    if (text.size() < 4) throw InputError("malformed graph6: truncated header");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - 63);
    pos = 4;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected)
    throw InputError("malformed graph6: expected " + std::to_string(expected) + " data bytes, got " +
                     std::to_string(text.size() - pos));

  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) pairs.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    int byte = text.back() - 63;
    int pad = static_cast<int>(6 - bits % 6);
    if ((byte & ((1 << pad) - 1)) != 0) throw InputError("malformed graph6: nonzero padding bits");
  }
  return Graph::from_edge_list(n, pairs);
}

// Plain edge list: first line n, then one "u v" pair per line. Blank lines and '#' comments are skipped.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long long> nums;
    std::string tok;
    while (fields >> tok) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw InputError("edge list: bad token '" + tok + "'");
      nums.push_back(value);
    }
    if (nums.empty()) continue;
    if (n < 0) {
      if (nums.size() != 1 || nums[0] < 0) throw InputError("edge list: first line must be the vertex count");
      n = static_cast<int>(nums[0]);
      continue;
    }
    if (nums.size() != 2) throw InputError("edge list: expected 'u v' on each line");
    pairs.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
  }
  if (n < 0) throw InputError("edge list: missing vertex count");
  return Graph::from_edge_list(n, pairs);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace sunfactor
