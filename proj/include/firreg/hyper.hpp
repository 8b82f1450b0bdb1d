#pragma once

/**
 * Small-graph atlases and n-hyper-irregularity.
 *
 * Two canonical forms are provided. full_scan_canonical() minimises the
 * upper-triangle adjacency bit-string (graph6 column order) over every
 * vertex permutation; refined_canonical() first splits the vertices by
 * iterated degree refinement and minimises only over permutations inside
 * the resulting cells. Both are complete invariants; the second is what
 * makes orders 7 and 8 affordable.
 */

#include "firreg/counting.hpp"
#include "firreg/graph.hpp"
#include "firreg/graph6.hpp"
#include "firreg/verify.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace firreg {

using CanonCode = std::uint64_t;

inline constexpr std::size_t kMaxCanonOrder = 11;  // 55 bits of adjacency

namespace detail {

using SmallRows = std::array<std::uint16_t, kMaxCanonOrder>;

inline auto small_rows(const Graph &g) -> SmallRows {
  if (g.order() > kMaxCanonOrder)
    throw std::invalid_argument("canonical form: order " + std::to_string(g.order()) + " exceeds " +
                                std::to_string(kMaxCanonOrder));
  SmallRows rows{};
  for (const Edge &e : g.edges()) {
    rows[e.u] |= static_cast<std::uint16_t>(1U << e.v);
    rows[e.v] |= static_cast<std::uint16_t>(1U << e.u);
  }
  return rows;
}

/// Bit-string of the graph whose position i holds vertex at[i].
inline auto code_of(const SmallRows &rows, std::size_t n, const Vertex *at) -> CanonCode {
  CanonCode code = 0;
  for (std::size_t j = 1; j < n; ++j) {
    const std::uint16_t row = rows[at[j]];
    for (std::size_t i = 0; i < j; ++i)
      code = (code << 1) | ((row >> at[i]) & 1U);
  }
  return code;
}

}  // namespace detail

inline auto graph_from_code(std::size_t n, CanonCode code) -> Graph {
  std::vector<Edge> edges;
  std::size_t bit = n * (n - 1) / 2;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if ((code >> --bit) & 1U)
        edges.push_back({i, j});
  return Graph(n, edges);
}

struct CanonicalForm {
  CanonCode code = 0;
  Graph graph;
};

inline auto full_scan_canonical(const Graph &g) -> CanonicalForm {
  const std::size_t n = g.order();
  const auto rows = detail::small_rows(g);
  std::vector<Vertex> at(n);
  std::iota(at.begin(), at.end(), 0);
  CanonCode best = ~CanonCode{0};
  do {
    best = std::min(best, detail::code_of(rows, n, at.data()));
  } while (std::next_permutation(at.begin(), at.end()));
  return {best, graph_from_code(n, best)};
}

inline auto refined_canonical(const Graph &g) -> CanonicalForm {
  const std::size_t n = g.order();
  const auto rows = detail::small_rows(g);

  std::vector<std::size_t> color(n);
  for (Vertex v = 0; v < n; ++v)
    color[v] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex u = 0; u < n; ++u)
        if ((rows[v] >> u) & 1U)
          sig[v].second.push_back(color[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (Vertex v = 0; v < n; ++v)
      color[v] = static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    if (uniq.size() == classes)
      break;
    classes = uniq.size();
  }

  std::vector<Vertex> at(n);
  std::iota(at.begin(), at.end(), 0);
  std::stable_sort(at.begin(), at.end(), [&](Vertex a, Vertex b) { return color[a] < color[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t b = 0; b < n;) {
    std::size_t e = b;
    while (e < n && color[at[e]] == color[at[b]])
      ++e;
    cells.emplace_back(b, e);
    b = e;
  }

  CanonCode best = ~CanonCode{0};
  auto walk = [&](auto &&self, std::size_t c) -> void {
    if (c == cells.size()) {
      best = std::min(best, detail::code_of(rows, n, at.data()));
      return;
    }
    auto first = at.begin() + static_cast<std::ptrdiff_t>(cells[c].first);
    auto last = at.begin() + static_cast<std::ptrdiff_t>(cells[c].second);
    std::sort(first, last);
    do {
      self(self, c + 1);
    } while (std::next_permutation(first, last));
  };
  walk(walk, 0);
  return {best, graph_from_code(n, best)};
}

/// All graphs of order <= n with at least two edges, one per isomorphism class.
struct PatternAtlas {
  std::size_t n = 0;
  bool include_padded = true;
  std::vector<Graph> patterns;  // by (order, edge count, canonical code)
};

inline constexpr std::size_t kMaxAtlasOrder = 6;

/// Canonical codes of every graph on exactly k vertices (full permutation scan).
inline auto classes_of_order(std::size_t k) -> std::vector<CanonCode> {
  if (k > 8)
    throw std::invalid_argument("classes_of_order: order " + std::to_string(k) + " too large for a full scan");
  const std::size_t bits = k * (k - 1) / 2;
  std::set<CanonCode> seen;
  for (CanonCode mask = 0; mask < (CanonCode{1} << bits); ++mask) {
    const Graph g = graph_from_code(k, mask);
    seen.insert(full_scan_canonical(g).code);
  }
  return {seen.begin(), seen.end()};
}

inline auto build_atlas(std::size_t n, bool include_padded = true) -> PatternAtlas {
  if (n < 3 || n > kMaxAtlasOrder)
    throw PreconditionError("build_atlas: n = " + std::to_string(n) + " outside 3.." +
                            std::to_string(kMaxAtlasOrder));
  PatternAtlas atlas;
  atlas.n = n;
  atlas.include_padded = include_padded;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Graph> level;
    for (CanonCode code : classes_of_order(k)) {
      Graph g = graph_from_code(k, code);
      if (g.edge_count() < 2)
        continue;
      if (!include_padded && min_degree(g) == 0)
        continue;
      level.push_back(std::move(g));
    }
    std::stable_sort(level.begin(), level.end(),
                     [](const Graph &a, const Graph &b) { return a.edge_count() < b.edge_count(); });
    for (auto &g : level)
      atlas.patterns.push_back(std::move(g));
  }
  return atlas;
}

struct PatternVerdict {
  std::string pattern;  // graph6
  bool irregular = false;
  DegreeProfile profile;
  std::vector<Collision> collisions;
};

struct HyperVerdict {
  std::size_t n = 0;
  bool hyper_irregular = false;
  std::optional<PatternVerdict> witness;  // first failing pattern in atlas order
  std::vector<PatternVerdict> per_pattern;
};

inline auto is_hyper_irregular(const Graph &g, const PatternAtlas &atlas, CountOptions opts = {},
                               bool stop_at_first_failure = false) -> HyperVerdict {
  HyperVerdict out;
  out.n = atlas.n;
  out.hyper_irregular = true;
  for (const Graph &h : atlas.patterns) {
    if (h.order() > kMaxPatternOrder)
      throw std::invalid_argument("is_hyper_irregular: pattern order exceeds counting bound");
    const Pattern pat(h);
    PatternVerdict pv;
    pv.pattern = emit_graph6(h);
    pv.profile = degree_profile(pat, g, {}, opts);
    const Certificate cert = certify_irregular(pat, pv.profile);
    pv.irregular = cert.overall();
    pv.collisions = cert.collisions;
    if (!pv.irregular && !out.witness) {
      out.hyper_irregular = false;
      out.witness = pv;
    }
    out.per_pattern.push_back(std::move(pv));
    if (!out.hyper_irregular && stop_at_first_failure)
      break;
  }
  return out;
}

inline auto is_hyper_irregular(const Graph &g, std::size_t n, CountOptions opts = {}) -> HyperVerdict {
  return is_hyper_irregular(g, build_atlas(n), opts);
}

enum class SearchMode { kExhaustive, kRandom };

struct SearchReport {
  std::size_t order = 0;
  SearchMode mode = SearchMode::kExhaustive;
  std::uint64_t seed = 0;
  std::size_t budget = 0;  // 0 = unlimited (exhaustive only)
  std::size_t visited = 0;
  std::size_t irregular_seen = 0;
  bool exhausted = false;
  std::optional<Graph> found;  // first P3-irregular graph met
};

namespace detail {

inline auto p3_pattern() -> const Pattern & {
  static const Pattern p3(Graph(3, {{0, 1}, {1, 2}}));
  return p3;
}

inline auto p3_irregular(const Graph &g) -> bool {
  const DegreeProfile prof = degree_profile(p3_pattern(), g);
  std::vector<Count> v = prof.counts;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

/// Isomorphism classes of order k as canonical graphs, grown vertex by vertex.
inline auto grow_classes(std::size_t k) -> std::vector<Graph> {
  std::vector<Graph> current{Graph(1)};
  for (std::size_t order = 2; order <= k; ++order) {
    std::unordered_set<CanonCode> seen;
    std::vector<Graph> next;
    for (const Graph &base : current) {
      const auto edges = base.edges();
      for (std::uint32_t mask = 0; mask < (1U << (order - 1)); ++mask) {
        std::vector<Edge> e = edges;
        for (Vertex u = 0; u + 1 < order; ++u)
          if ((mask >> u) & 1U)
            e.push_back({u, order - 1});
        auto canon = refined_canonical(Graph(order, e));
        if (seen.insert(canon.code).second)
          next.push_back(std::move(canon.graph));
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace detail

/**
 * Looks for a graph of the given order with pairwise distinct P3-degrees.
 * Exhaustive mode walks the isomorphism classes of that order (grown from
 * the classes one order below) and stops at the first hit unless
 * stop_at_first is false; random mode samples G(order, 1/2).
 */
inline auto search_p3_irregular(std::size_t order, SearchMode mode, std::size_t budget, std::uint64_t seed = 0,
                                bool stop_at_first = true) -> SearchReport {
  if (order < 6)
    throw PreconditionError("search_p3_irregular: order " + std::to_string(order) + " is below 6");
  if (mode == SearchMode::kExhaustive && order > 9)
    throw PreconditionError("search_p3_irregular: exhaustive mode supports orders 6..9");
  SearchReport rep;
  rep.order = order;
  rep.mode = mode;
  rep.seed = seed;
  rep.budget = budget;

  auto visit = [&](const Graph &g) -> bool {
    ++rep.visited;
    if (detail::p3_irregular(g)) {
      ++rep.irregular_seen;
      if (!rep.found)
        rep.found = g;
      if (stop_at_first)
        return false;
    }
    return budget == 0 || rep.visited < budget;
  };

  if (mode == SearchMode::kExhaustive) {
    const std::vector<Graph> below = detail::grow_classes(order - 1);
    std::unordered_set<CanonCode> seen;
    bool going = true;
    for (std::size_t b = 0; b < below.size() && going; ++b) {
      const auto edges = below[b].edges();
      for (std::uint32_t mask = 0; mask < (1U << (order - 1)) && going; ++mask) {
        std::vector<Edge> e = edges;
        for (Vertex u = 0; u + 1 < order; ++u)
          if ((mask >> u) & 1U)
            e.push_back({u, order - 1});
        auto canon = refined_canonical(Graph(order, e));
        if (seen.insert(canon.code).second)
          going = visit(canon.graph);
      }
    }
    rep.exhausted = going;
  } else {
    if (budget == 0)
      throw PreconditionError("search_p3_irregular: random mode needs a positive budget");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    bool going = true;
    while (going) {
      std::vector<Edge> e;
      for (Vertex j = 1; j < order; ++j)
        for (Vertex i = 0; i < j; ++i)
          if (coin(rng))
            e.push_back({i, j});
      going = visit(Graph(order, e));
    }
    rep.exhausted = rep.visited >= budget && !rep.found;
  }
  return rep;
}

inline auto to_string(SearchMode m) -> std::string { return m == SearchMode::kExhaustive ? "exhaustive" : "random"; }

}  // namespace firreg
