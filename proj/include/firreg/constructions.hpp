#pragma once

/**
 * Builders for the graph family A_{2l-1} / F_{2l} and the auxiliary graphs
 * X, X^- and H used when comparing F-degrees inside it.
 *
 * All builders return graphs with label offset 1, so vertex index i is
 * label i + 1 (labels run 1..2l for F_{2l}). X and X^- are induced on a
 * non-contiguous label set; they come with an origin table into F_{2l}.
 */

#include "firreg/graph.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace firreg {

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// (n, t, l): pattern order, pattern minimum degree, scale.
struct ConstructionParams {
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t l = 0;

  friend auto operator==(const ConstructionParams &, const ConstructionParams &) -> bool = default;

  /// Throws PreconditionError naming the first violated requirement.
  void validate() const {
    if (n < 3)
      throw PreconditionError("params: n = " + std::to_string(n) + " but a diameter-2 pattern has n >= 3");
    if (t < 1)
      throw PreconditionError("params: t = 0 but a connected pattern has minimum degree >= 1");
    if (t + 2 > n)
      throw PreconditionError("params: t = " + std::to_string(t) + " exceeds n - 2 = " + std::to_string(n - 2));
    if (l <= n)
      throw PreconditionError("params: l = " + std::to_string(l) + " must exceed n = " + std::to_string(n));
  }
};

/// n = |F| and t = delta(F) for a pattern of diameter exactly 2.
inline auto derive_params(const Graph &f) -> ConstructionParams {
  for (Vertex s = 0; s < f.order(); ++s) {
    const auto dist = distances_from(f, s);
    for (Vertex v = 0; v < f.order(); ++v) {
      if (!dist[v])
        throw PreconditionError("derive_params: pattern is disconnected (no path " + std::to_string(s) + " -> " +
                                std::to_string(v) + ")");
      if (*dist[v] > 2)
        throw PreconditionError("derive_params: pattern has diameter > 2 (distance " + std::to_string(*dist[v]) +
                                " between " + std::to_string(s) + " and " + std::to_string(v) + ")");
    }
  }
  const auto d = diameter(f);
  if (!d || *d != 2)
    throw PreconditionError("derive_params: pattern has diameter " + (d ? std::to_string(*d) : std::string("inf")) +
                            ", expected 2");
  ConstructionParams p{f.order(), min_degree(f), 0};
  if (p.t + 2 > p.n)
    throw std::logic_error("derive_params: delta(F) > |F| - 2 for a diameter-2 graph");
  return p;
}

inline auto params_for(const Graph &f, std::size_t l) -> ConstructionParams {
  ConstructionParams p = derive_params(f);
  p.l = l;
  return p;
}

/// Labels 1..2l-1; i ~ j iff |i - j| <= l - 1.
inline auto build_A(std::size_t l) -> Graph {
  if (l < 2)
    throw PreconditionError("build_A: l = " + std::to_string(l) + " but l >= 2 is required");
  const std::size_t order = 2 * l - 1;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < order; ++i)
    for (Vertex j = i + 1; j < order && j - i <= l - 1; ++j)
      edges.push_back({i, j});
  return Graph(order, edges, 1);
}

/// A_{2l-1} plus vertex 2l joined to labels 1..t.
inline auto build_F2l(const ConstructionParams &p) -> Graph {
  p.validate();
  const Graph a = build_A(p.l);
  std::vector<Edge> edges = a.edges();
  const Vertex top = 2 * p.l - 1;  // label 2l
  for (Vertex i = 0; i < p.t; ++i)
    edges.push_back({i, top});
  return Graph(2 * p.l, edges, 1);
}

inline auto build_F2l(const Graph &f, std::size_t l) -> Graph { return build_F2l(params_for(f, l)); }

/// Labels of X inside F_{2l}: {1..l+t-1} and 2l.
inline auto x_label_set(const ConstructionParams &p) -> VertexSet {
  VertexSet s(2 * p.l);
  for (Vertex i = 0; i + 1 <= p.l + p.t - 1; ++i)
    s.set(i);
  s.set(2 * p.l - 1);
  return s;
}

inline auto build_X(const ConstructionParams &p) -> InducedSubgraph {
  return induced_subgraph(build_F2l(p), x_label_set(p));
}

/// X with edges (1,l), ..., (i-l, l) removed; i is a label in l+1..l+t-1.
inline auto build_X_minus(const ConstructionParams &p, std::size_t i) -> InducedSubgraph {
  p.validate();
  if (p.t < 2)
    throw PreconditionError("build_X_minus: requires t >= 2, got t = " + std::to_string(p.t));
  if (i < p.l + 1 || i > p.l + p.t - 1)
    throw PreconditionError("build_X_minus: label " + std::to_string(i) + " outside " + std::to_string(p.l + 1) +
                            ".." + std::to_string(p.l + p.t - 1));
  InducedSubgraph x = build_X(p);
  // X keeps labels 1..l+t-1 at indices 0..l+t-2, so label k sits at index k - 1.
  const Vertex lv = p.l - 1;
  for (std::size_t k = 1; k <= i - p.l; ++k)
    x.graph = delete_edge(x.graph, k - 1, lv);
  return x;
}

/// A_{2l-1} minus edge (i+1, l+i), 1 <= i <= l-1.
inline auto build_H(std::size_t l, std::size_t i) -> Graph {
  if (i < 1 || i + 1 > l)
    throw PreconditionError("build_H: i = " + std::to_string(i) + " outside 1.." + std::to_string(l - 1));
  return delete_edge(build_A(l), i, l + i - 1);
}

/// Origin-table lookup: subgraph index of a host label, if present.
inline auto index_in(const InducedSubgraph &s, const Graph &host, long long label) -> std::optional<Vertex> {
  const Vertex hv = host.vertex_of_label(label);
  for (Vertex i = 0; i < s.origin.size(); ++i)
    if (s.origin[i] == hv)
      return i;
  return std::nullopt;
}

}  // namespace firreg
