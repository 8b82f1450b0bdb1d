#pragma once

// Seeded generators shared by the property tests.

#include "firreg/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace firreg::testing {

inline auto random_graph(std::mt19937_64 &rng, std::size_t order, double p) -> Graph {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex j = 1; j < order; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (coin(rng))
        edges.push_back({i, j});
  return Graph(order, edges);
}

inline auto random_permutation(std::mt19937_64 &rng, std::size_t n) -> std::vector<Vertex> {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Adjacency matrix as plain bools.
inline auto matrix_of(const Graph &g) -> std::vector<std::vector<bool>> {
  std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order()));
  for (const Edge &e : g.edges())
    m[e.u][e.v] = m[e.v][e.u] = true;
  return m;
}

}  // namespace firreg::testing
