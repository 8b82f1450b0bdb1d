#pragma once

/**
 * Simple undirected graphs over contiguous vertex indices 0..order-1, stored
 * as one neighbour bit-set per vertex. Graph values are immutable once
 * built; every "mutation" returns a new graph.
 *
 * label_offset only affects presentation: vertex i is reported as label
 * i + label_offset (the constructions use offset 1).
 */

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace firreg {

using Vertex = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator==(const Edge &, const Edge &) -> bool = default;
};

/// Bit-set over the vertex indices of one graph.
class VertexSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members)
      set(v);
  }

  static auto full(std::size_t universe) -> VertexSet {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v)
      s.set(v);
    return s;
  }

  auto universe() const -> std::size_t { return universe_; }
  auto words() const -> std::span<const Word> { return words_; }

  auto test(Vertex v) const -> bool {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }

  auto set(Vertex v) -> VertexSet & {
    if (v >= universe_)
      throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " outside universe of size " +
                              std::to_string(universe_));
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
    return *this;
  }

  auto reset(Vertex v) -> VertexSet & {
    if (v < universe_)
      words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    return *this;
  }

  auto count() const -> std::size_t {
    std::size_t c = 0;
    for (Word w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  auto empty() const -> bool {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  auto intersect_with(const VertexSet &o) -> VertexSet & {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }

  auto unite_with(const VertexSet &o) -> VertexSet & {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }

  auto subtract(const VertexSet &o) -> VertexSet & {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }

  auto intersects(const VertexSet &o) const -> bool {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0)
        return true;
    return false;
  }

  template <typename F>
  void for_each(F &&f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        f(static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  auto members() const -> std::vector<Vertex> {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  friend auto operator&(VertexSet a, const VertexSet &b) -> VertexSet { return a.intersect_with(b); }
  friend auto operator|(VertexSet a, const VertexSet &b) -> VertexSet { return a.unite_with(b); }
  friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

private:
  void same_universe(const VertexSet &o) const {
    if (o.universe_ != universe_)
      throw std::invalid_argument("VertexSet: universe mismatch (" + std::to_string(universe_) + " vs " +
                                  std::to_string(o.universe_) + ")");
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

class Graph {
public:
  explicit Graph(std::size_t order, int label_offset = 0) : order_(order), label_offset_(label_offset) {
    if (order == 0)
      throw std::invalid_argument("Graph: order must be at least 1");
    rows_.assign(order, VertexSet(order));
  }

  Graph(std::size_t order, std::span<const Edge> edges, int label_offset = 0) : Graph(order, label_offset) {
    for (const Edge &e : edges)
      link(e.u, e.v);
  }

  Graph(std::size_t order, std::initializer_list<Edge> edges, int label_offset = 0)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size()), label_offset) {}

  auto order() const -> std::size_t { return order_; }
  auto label_offset() const -> int { return label_offset_; }
  auto label(Vertex v) const -> long long { return static_cast<long long>(v) + label_offset_; }

  auto vertex_of_label(long long label) const -> Vertex {
    const long long idx = label - label_offset_;
    if (idx < 0 || static_cast<std::size_t>(idx) >= order_)
      throw std::out_of_range("Graph: label " + std::to_string(label) + " not in graph of order " +
                              std::to_string(order_));
    return static_cast<Vertex>(idx);
  }

  auto with_label_offset(int offset) const -> Graph {
    Graph g = *this;
    g.label_offset_ = offset;
    return g;
  }

  auto adjacent(Vertex u, Vertex v) const -> bool {
    check_vertex(u);
    return rows_[u].test(v);
  }

  auto neighbors(Vertex v) const -> const VertexSet & {
    check_vertex(v);
    return rows_[v];
  }

  auto degree(Vertex v) const -> std::size_t { return neighbors(v).count(); }

  auto edge_count() const -> std::size_t {
    std::size_t twice = 0;
    for (const auto &r : rows_)
      twice += r.count();
    return twice / 2;
  }

  /// Edges with u < v, ordered by (u, v).
  auto edges() const -> std::vector<Edge> {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order_; ++u)
      rows_[u].for_each([&](Vertex v) {
        if (u < v)
          out.push_back({u, v});
      });
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v >= order_)
      throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(order_));
  }

  auto invariants_hold() const -> bool {
    for (Vertex u = 0; u < order_; ++u) {
      if (rows_[u].test(u))
        return false;
      bool symmetric = true;
      rows_[u].for_each([&](Vertex v) { symmetric = symmetric && rows_[v].test(u); });
      if (!symmetric)
        return false;
    }
    return true;
  }

  /// Equality of order and adjacency; the label offset is presentation only.
  friend auto operator==(const Graph &a, const Graph &b) -> bool {
    return a.order_ == b.order_ && a.rows_ == b.rows_;
  }

private:
  friend auto delete_edge(const Graph &g, Vertex u, Vertex v) -> Graph;

  void link(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
  }

  std::size_t order_;
  std::vector<VertexSet> rows_;
  int label_offset_ = 0;
};

inline auto degree(const Graph &g, Vertex v) -> std::size_t { return g.degree(v); }

inline auto min_degree(const Graph &g) -> std::size_t {
  std::size_t best = g.order();
  for (Vertex v = 0; v < g.order(); ++v)
    best = std::min(best, g.degree(v));
  return best;
}

inline auto closed_neighborhood(const Graph &g, Vertex v) -> VertexSet {
  VertexSet s = g.neighbors(v);
  s.set(v);
  return s;
}

/// Breadth-first distances from source; nullopt for unreachable vertices.
inline auto distances_from(const Graph &g, Vertex source) -> std::vector<std::optional<std::size_t>> {
  g.check_vertex(source);
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](Vertex v) {
      if (!dist[v]) {
        dist[v] = *dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

inline auto is_connected(const Graph &g) -> bool {
  const auto dist = distances_from(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto &d) { return d.has_value(); });
}

/// Largest shortest-path distance; nullopt stands for infinity (disconnected).
inline auto diameter(const Graph &g) -> std::optional<std::size_t> {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (const auto &d : distances_from(g, s)) {
      if (!d)
        return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

inline auto delete_edge(const Graph &g, Vertex u, Vertex v) -> Graph {
  if (!g.adjacent(u, v))
    throw std::invalid_argument("delete_edge: no edge between vertices " + std::to_string(u) + " and " +
                                std::to_string(v));
  Graph h = g;
  h.rows_[u].reset(v);
  h.rows_[v].reset(u);
  return h;
}

/// Image of g under v -> perm[v].
inline auto relabel(const Graph &g, std::span<const Vertex> perm) -> Graph {
  if (perm.size() != g.order())
    throw std::invalid_argument("relabel: permutation size does not match graph order");
  VertexSet image(g.order());
  for (Vertex v : perm)
    image.set(v);
  if (image.count() != g.order())
    throw std::invalid_argument("relabel: not a permutation");
  std::vector<Edge> edges;
  for (const Edge &e : g.edges())
    edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.order(), edges, g.label_offset());
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> origin;  // origin[i] = host vertex of subgraph vertex i
};

/// Subgraph induced by s; vertices keep their relative order.
inline auto induced_subgraph(const Graph &g, const VertexSet &s) -> InducedSubgraph {
  if (s.universe() != g.order())
    throw std::invalid_argument("induced_subgraph: vertex set universe does not match graph order");
  if (s.empty())
    throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::vector<Vertex> origin = s.members();
  std::vector<std::size_t> position(g.order(), g.order());
  for (std::size_t i = 0; i < origin.size(); ++i)
    position[origin[i]] = i;
  std::vector<Edge> edges;
  for (const Edge &e : g.edges())
    if (s.test(e.u) && s.test(e.v))
      edges.push_back({position[e.u], position[e.v]});
  return {Graph(origin.size(), edges), std::move(origin)};
}

}  // namespace firreg
