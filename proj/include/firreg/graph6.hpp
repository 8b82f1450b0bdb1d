#pragma once

// graph6 encoding (nauty/McKay format) for simple undirected graphs.

#include "firreg/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace firreg {

class Graph6Error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";
inline constexpr std::size_t kGraph6MaxOrder = 68719476735ULL;  // 2^36 - 1

inline auto emit_graph6(const Graph &g) -> std::string {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }

  int filled = 0;
  int group = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        filled = 0;
        group = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

/// Parses one graph6 record. A leading ">>graph6<<" header and one trailing
/// newline are accepted; anything else out of place is an error.
inline auto parse_graph6(std::string_view text) -> Graph {
  if (text.starts_with(kGraph6Header))
    text.remove_prefix(kGraph6Header.size());
  if (text.ends_with('\n'))
    text.remove_suffix(1);
  if (text.ends_with('\r'))
    text.remove_suffix(1);
  if (text.empty())
    throw Graph6Error("graph6: empty input");

  std::size_t pos = 0;
  auto sextet = [&](const char *what) -> std::uint64_t {
    if (pos >= text.size())
      throw Graph6Error(std::string("graph6: truncated ") + what);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      throw Graph6Error("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(pos) +
                        " outside printable range 63..126");
    ++pos;
    return static_cast<std::uint64_t>(c - 63);
  };

  std::uint64_t n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = sextet("header");
  } else {
    ++pos;
    int digits = 3;
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
      ++pos;
      digits = 6;
    }
    for (int k = 0; k < digits; ++k)
      n = (n << 6) | sextet("header");
  }
  if (n == 0)
    throw Graph6Error("graph6: order 0 graphs are not supported");

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes)
    throw Graph6Error("graph6: truncated adjacency data (need " + std::to_string(bytes) + " bytes, have " +
                      std::to_string(text.size() - pos) + ")");
  if (text.size() - pos > bytes)
    throw Graph6Error("graph6: trailing garbage after " + std::to_string(pos + bytes) + " bytes");

  std::vector<Edge> edges;
  std::uint64_t current = 0;
  int remaining = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (remaining == 0) {
        current = sextet("adjacency data");
        remaining = 6;
      }
      --remaining;
      if ((current >> remaining) & 1U)
        edges.push_back({i, j});
    }
  }
  if (remaining > 0 && (current & ((1U << remaining) - 1)) != 0)
    throw Graph6Error("graph6: nonzero padding bits");
  return Graph(static_cast<std::size_t>(n), edges);
}

/// Reads every non-empty line of a graph6 stream.
inline auto read_graph6_stream(std::istream &in) -> std::vector<Graph> {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty() || line == kGraph6Header)
      continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Graph6Error &e) {
      throw Graph6Error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace firreg
