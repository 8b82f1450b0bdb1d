#pragma once

/**
 * Brute-force reference counter. Walks every ordered tuple of distinct host
 * vertices in lexicographic order, tests the pattern edges against a plain
 * boolean matrix, and divides by an automorphism count obtained by scanning
 * all vertex permutations. Deliberately shares nothing with the
 * backtracking engine in counting.hpp.
 */

#include "firreg/count.hpp"
#include "firreg/counting.hpp"
#include "firreg/graph.hpp"
#include "firreg/graph6.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace firreg {

inline constexpr std::size_t kOracleMaxHostOrder = 10;

namespace detail {

inline auto to_matrix(const Graph &g) -> std::vector<std::vector<bool>> {
  std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v)
      m[u][v] = g.adjacent(u, v);
  return m;
}

}  // namespace detail

/// Permutations of V(f) preserving adjacency and non-adjacency.
inline auto oracle_automorphism_count(const Graph &f) -> Count {
  if (f.order() > kOracleMaxHostOrder)
    throw std::invalid_argument("oracle_automorphism_count: order " + std::to_string(f.order()) + " too large");
  const auto m = detail::to_matrix(f);
  std::vector<std::size_t> perm(f.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t found = 0;
  do {
    bool ok = true;
    for (std::size_t u = 0; u < perm.size() && ok; ++u)
      for (std::size_t v = 0; v < perm.size() && ok; ++v)
        ok = m[u][v] == m[perm[u]][perm[v]];
    found += ok ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Count{found};
}

inline auto oracle_count_copies(const Graph &f, const Graph &g, const CopyConstraints &c = {}) -> Count {
  if (g.order() > kOracleMaxHostOrder)
    throw std::invalid_argument("oracle_count_copies: host order " + std::to_string(g.order()) + " exceeds " +
                                std::to_string(kOracleMaxHostOrder));
  if (f.order() > g.order())
    throw std::invalid_argument("oracle_count_copies: pattern larger than host");
  c.validate(g);

  const auto fm = detail::to_matrix(f);
  const auto gm = detail::to_matrix(g);
  const std::size_t k = f.order();
  const std::size_t n = g.order();

  auto required = [&](std::size_t v) { return c.required_vertices.test(v); };
  auto forbidden = [&](std::size_t v) { return c.forbidden_vertices.test(v); };

  std::uint64_t maps = 0;
  std::vector<std::size_t> tuple(k, 0);
  while (true) {
    // Odometer over all k-tuples; the digit k-1 turns fastest.
    bool distinct = true;
    for (std::size_t a = 0; a < k && distinct; ++a)
      for (std::size_t b = a + 1; b < k && distinct; ++b)
        distinct = tuple[a] != tuple[b];
    if (distinct) {
      bool ok = true;
      for (std::size_t a = 0; a < k && ok; ++a)
        for (std::size_t b = a + 1; b < k && ok; ++b)
          if (fm[a][b] && !gm[tuple[a]][tuple[b]])
            ok = false;
      for (std::size_t a = 0; a < k && ok; ++a)
        ok = !forbidden(tuple[a]);
      for (std::size_t v = 0; v < n && ok; ++v)
        if (required(v))
          ok = std::find(tuple.begin(), tuple.end(), v) != tuple.end();
      for (const Edge &e : c.required_edges) {
        if (!ok)
          break;
        bool covered = false;
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b)
            if (fm[a][b] && tuple[a] == e.u && tuple[b] == e.v)
              covered = true;
        ok = covered;
      }
      maps += ok ? 1 : 0;
    }
    std::size_t digit = k;
    while (digit > 0) {
      --digit;
      if (++tuple[digit] < n)
        break;
      tuple[digit] = 0;
      if (digit == 0) {
        digit = k + 1;
        break;
      }
    }
    if (digit == k + 1 || k == 0)
      break;
  }

  const Count aut = oracle_automorphism_count(f);
  return divide_exact(Count{maps}, aut);
}

struct OracleMismatch {
  std::string pattern;  // graph6
  std::string host;     // graph6
  std::string shape;
  Count engine;
  Count oracle;
};

struct OracleRunReport {
  std::size_t pairs = 0;
  std::size_t comparisons = 0;
  std::size_t disconnected_patterns = 0;
  std::map<std::string, std::size_t> shape_counts;
  std::vector<OracleMismatch> mismatches;

  auto ok() const -> bool { return mismatches.empty(); }
};

/**
 * Random (pattern, host) pairs, each compared under four constraint shapes:
 * none, one required vertex, one required host edge, one forbidden vertex.
 * The pattern and host edge densities are drawn per pair so sparse,
 * disconnected patterns show up regularly.
 */
inline auto oracle_equivalence_run(std::size_t pairs, std::uint64_t seed, std::size_t max_host = 9,
                                   std::size_t max_pattern = 5, CountOptions opts = {}) -> OracleRunReport {
  if (max_host > kOracleMaxHostOrder || max_pattern > max_host || max_pattern == 0)
    throw std::invalid_argument("oracle_equivalence_run: bad size bounds");
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto random_graph = [&](std::size_t order, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (Vertex j = 1; j < order; ++j)
      for (Vertex i = 0; i < j; ++i)
        if (coin(rng))
          e.push_back({i, j});
    return Graph(order, e);
  };

  OracleRunReport rep;
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::size_t pf = uniform(1, max_pattern);
    const std::size_t pg = uniform(std::max<std::size_t>(pf, 2), max_host);
    const Graph f = random_graph(pf, std::uniform_real_distribution<double>(0.2, 0.9)(rng));
    const Graph g = random_graph(pg, std::uniform_real_distribution<double>(0.3, 0.95)(rng));
    const Pattern pat(f);
    rep.pairs += 1;
    if (!is_connected(f))
      rep.disconnected_patterns += 1;

    std::vector<std::pair<std::string, CopyConstraints>> shapes;
    shapes.emplace_back("none", CopyConstraints{});
    {
      auto c = CopyConstraints::for_host(g);
      c.require(uniform(0, pg - 1));
      shapes.emplace_back("required-vertex", c);
    }
    if (const auto edges = g.edges(); !edges.empty()) {
      auto c = CopyConstraints::for_host(g);
      const Edge e = edges[uniform(0, edges.size() - 1)];
      c.require_edge(e.u, e.v);
      shapes.emplace_back("required-edge", c);
    }
    {
      auto c = CopyConstraints::for_host(g);
      c.forbid(uniform(0, pg - 1));
      shapes.emplace_back("forbidden-vertex", c);
    }
    for (const auto &[name, c] : shapes) {
      const Count engine = count_copies(pat, g, c, opts);
      const Count oracle = oracle_count_copies(f, g, c);
      rep.comparisons += 1;
      rep.shape_counts[name] += 1;
      if (engine != oracle)
        rep.mismatches.push_back({emit_graph6(f), emit_graph6(g), name, engine, oracle});
    }
  }
  return rep;
}

}  // namespace firreg
