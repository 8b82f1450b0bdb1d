#pragma once

/**
 * Exact counting of (not necessarily induced) copies of a pattern graph F in
 * a host graph G.
 *
 * A copy is a subgraph of G isomorphic to F. Every copy is the image of
 * exactly |Aut(F)| injective edge-preserving maps V(F) -> V(G), so the
 * engine counts those maps ("monomorphisms") by backtracking over host
 * neighbour bit-sets and divides by |Aut(F)|. Per-vertex counts come out of
 * the same pass: every completed map credits each host vertex in its image.
 *
 * Constraints (required vertices, forbidden vertices, required edges) only
 * depend on the image subgraph, so they commute with the division.
 */

#include "firreg/count.hpp"
#include "firreg/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace firreg {

using Wide = unsigned __int128;

inline constexpr std::size_t kMaxPatternOrder = 10;

struct CopyConstraints {
  VertexSet required_vertices;   // universe 0 means "none"
  VertexSet forbidden_vertices;  // universe 0 means "none"
  std::vector<Edge> required_edges;

  static auto for_host(const Graph &g) -> CopyConstraints {
    return {VertexSet(g.order()), VertexSet(g.order()), {}};
  }

  auto require(Vertex v) -> CopyConstraints & {
    required_vertices.set(v);
    return *this;
  }
  auto forbid(Vertex v) -> CopyConstraints & {
    forbidden_vertices.set(v);
    return *this;
  }
  auto require_edge(Vertex u, Vertex v) -> CopyConstraints & {
    required_edges.push_back({u, v});
    return *this;
  }

  auto trivial() const -> bool {
    return required_vertices.empty() && forbidden_vertices.empty() && required_edges.empty();
  }

  /// Throws std::invalid_argument on constraints that cannot refer to g.
  void validate(const Graph &g) const {
    for (const VertexSet *s : {&required_vertices, &forbidden_vertices})
      if (s->universe() != 0 && s->universe() != g.order())
        throw std::invalid_argument("constraints: vertex set universe " + std::to_string(s->universe()) +
                                    " does not match host order " + std::to_string(g.order()));
    if (required_vertices.universe() != 0 && forbidden_vertices.universe() != 0 &&
        required_vertices.intersects(forbidden_vertices))
      throw std::invalid_argument("constraints: a vertex is both required and forbidden");
    for (const Edge &e : required_edges) {
      g.check_vertex(e.u);
      g.check_vertex(e.v);
      if (!g.adjacent(e.u, e.v))
        throw std::invalid_argument("constraints: required edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") is not a host edge");
      if (forbidden_vertices.test(e.u) || forbidden_vertices.test(e.v))
        throw std::invalid_argument("constraints: required edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") has a forbidden endpoint");
    }
  }
};

struct CountOptions {
  unsigned workers = 1;
  /// Close the last level with one popcount instead of visiting each leaf.
  bool aggregate_leaves = true;
  /// Diagnostic: count induced copies instead (non-edges must map to non-edges).
  bool induced = false;
  bool per_vertex = true;
};

struct MonomorphismTally {
  Wide total = 0;
  std::vector<Wide> per_vertex;  // empty unless requested
};

namespace detail {

struct SearchPlan {
  std::vector<Vertex> order;                    // pattern vertex at each level
  std::vector<std::vector<std::size_t>> back;   // earlier levels adjacent in the pattern
  std::vector<std::vector<std::size_t>> apart;  // earlier levels non-adjacent (induced mode)
  std::vector<std::optional<Vertex>> fixed;     // forced host vertex per level
};

/// Greedy connectivity-first order starting with `prefix`.
inline auto make_plan(const Graph &f, std::vector<Vertex> prefix) -> SearchPlan {
  const std::size_t n = f.order();
  std::vector<bool> placed(n, false);
  for (Vertex p : prefix)
    placed[p] = true;
  std::vector<Vertex> order = std::move(prefix);
  while (order.size() < n) {
    Vertex best = n;
    std::size_t best_links = 0;
    std::size_t best_degree = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v])
        continue;
      std::size_t links = 0;
      for (Vertex u : order)
        links += f.adjacent(u, v) ? 1 : 0;
      const std::size_t deg = f.degree(v);
      if (best == n || links > best_links || (links == best_links && deg > best_degree)) {
        best = v;
        best_links = links;
        best_degree = deg;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  SearchPlan plan;
  plan.order = order;
  plan.back.resize(n);
  plan.apart.resize(n);
  plan.fixed.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < k; ++j)
      (f.adjacent(order[j], order[k]) ? plan.back : plan.apart)[k].push_back(j);
  return plan;
}

struct Task {
  std::size_t plan = 0;
  Vertex first = 0;  // host vertex for level 0
};

class Searcher {
public:
  using Word = VertexSet::Word;

  Searcher(const Graph &f, const Graph &g, const std::vector<SearchPlan> &plans, const VertexSet &allowed,
           const std::vector<Vertex> &residual_vertices, const std::vector<Edge> &residual_edges,
           const CountOptions &opts)
      : f_(f), g_(g), plans_(plans), residual_vertices_(residual_vertices), residual_edges_(residual_edges),
        opts_(opts), n_(f.order()), words_(allowed.words().size()) {
    allowed_.assign(allowed.words().begin(), allowed.words().end());
    rows_.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
      rows_.push_back(g.neighbors(v).words().data());
    cand_.assign(n_ * words_, 0);
    used_.assign(words_, 0);
    image_.assign(n_, 0);
    level_of_.assign(g.order(), kNone);
    if (opts.per_vertex)
      tally_.per_vertex.assign(g.order(), 0);
  }

  void run(const Task &task) {
    plan_ = &plans_[task.plan];
    first_ = task.first;
    extend(0);
  }

  auto tally() -> MonomorphismTally & { return tally_; }

private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void extend(std::size_t k) {
    Word *cand = cand_.data() + k * words_;
    for (std::size_t w = 0; w < words_; ++w)
      cand[w] = allowed_[w] & ~used_[w];
    for (std::size_t j : plan_->back[k]) {
      const Word *row = rows_[image_[j]];
      for (std::size_t w = 0; w < words_; ++w)
        cand[w] &= row[w];
    }
    if (opts_.induced) {
      for (std::size_t j : plan_->apart[k]) {
        const Word *row = rows_[image_[j]];
        for (std::size_t w = 0; w < words_; ++w)
          cand[w] &= ~row[w];
      }
    }
    std::optional<Vertex> forced = plan_->fixed[k];
    if (k == 0 && !forced)
      forced = first_;
    if (forced) {
      const bool ok = (cand[*forced / 64] >> (*forced % 64)) & 1U;
      std::fill(cand, cand + words_, Word{0});
      if (ok)
        cand[*forced / 64] = Word{1} << (*forced % 64);
    }

    if (k + 1 == n_ && opts_.aggregate_leaves && residual_satisfied(k)) {
      Wide c = 0;
      for (std::size_t w = 0; w < words_; ++w)
        c += static_cast<Wide>(std::popcount(cand[w]));
      if (c == 0)
        return;
      tally_.total += c;
      if (opts_.per_vertex) {
        for (std::size_t j = 0; j < k; ++j)
          tally_.per_vertex[image_[j]] += c;
        for_each_bit(cand, [&](Vertex v) { tally_.per_vertex[v] += 1; });
      }
      return;
    }

    for_each_bit(cand, [&](Vertex v) {
      image_[k] = v;
      used_[v / 64] |= Word{1} << (v % 64);
      level_of_[v] = k;
      if (k + 1 == n_)
        record();
      else
        extend(k + 1);
      level_of_[v] = kNone;
      used_[v / 64] &= ~(Word{1} << (v % 64));
    });
  }

  template <typename F>
  void for_each_bit(const Word *bits, F &&f) const {
    for (std::size_t w = 0; w < words_; ++w) {
      Word x = bits[w];
      while (x != 0) {
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(x))));
        x &= x - 1;
      }
    }
  }

  // Residual constraints already met by levels 0..k-1.
  auto residual_satisfied(std::size_t k) const -> bool {
    for (Vertex r : residual_vertices_)
      if (level_of_[r] == kNone || level_of_[r] >= k)
        return false;
    for (const Edge &e : residual_edges_) {
      const std::size_t a = level_of_[e.u];
      const std::size_t b = level_of_[e.v];
      if (a == kNone || b == kNone || a >= k || b >= k)
        return false;
      if (!f_.adjacent(plan_->order[a], plan_->order[b]))
        return false;
    }
    return true;
  }

  void record() {
    if (!residual_satisfied(n_))
      return;
    tally_.total += 1;
    if (opts_.per_vertex)
      for (std::size_t j = 0; j < n_; ++j)
        tally_.per_vertex[image_[j]] += 1;
  }

  const Graph &f_;
  const Graph &g_;
  const std::vector<SearchPlan> &plans_;
  const std::vector<Vertex> &residual_vertices_;
  const std::vector<Edge> &residual_edges_;
  const CountOptions &opts_;
  std::size_t n_;
  std::size_t words_;
  std::vector<Word> allowed_;
  std::vector<const Word *> rows_;
  std::vector<Word> cand_;
  std::vector<Word> used_;
  std::vector<Vertex> image_;
  std::vector<std::size_t> level_of_;
  const SearchPlan *plan_ = nullptr;
  Vertex first_ = 0;
  MonomorphismTally tally_;
};

inline void check_wide_headroom(const Graph &f, const Graph &g) {
  Count bound{1};
  for (std::size_t i = 0; i < f.order(); ++i)
    bound *= Count{g.order()};
  Count limit{1};
  for (int i = 0; i < 127; ++i)
    limit *= Count{2};
  if (bound >= limit)
    throw std::overflow_error("counting: host order " + std::to_string(g.order()) + " ^ pattern order " +
                              std::to_string(f.order()) + " exceeds the 127-bit accumulator range");
}

}  // namespace detail

/// Number of injective edge-preserving maps V(f) -> V(g) whose image meets c.
inline auto count_monomorphisms(const Graph &f, const Graph &g, const CopyConstraints &c, const CountOptions &opts)
    -> MonomorphismTally {
  c.validate(g);
  detail::check_wide_headroom(f, g);

  VertexSet allowed = VertexSet::full(g.order());
  if (c.forbidden_vertices.universe() != 0)
    allowed.subtract(c.forbidden_vertices);

  std::vector<Vertex> residual_vertices =
      c.required_vertices.universe() != 0 ? c.required_vertices.members() : std::vector<Vertex>{};
  std::vector<Edge> residual_edges = c.required_edges;

  std::vector<detail::SearchPlan> plans;
  std::vector<detail::Task> tasks;
  if (!residual_edges.empty()) {
    // Each map covering edge (a,b) sends exactly one ordered pattern edge onto it.
    const Edge e = residual_edges.front();
    residual_edges.erase(residual_edges.begin());
    std::erase_if(residual_vertices, [&](Vertex v) { return v == e.u || v == e.v; });
    for (const Edge &pe : f.edges()) {
      for (auto [p, q] : {std::pair{pe.u, pe.v}, std::pair{pe.v, pe.u}}) {
        auto plan = detail::make_plan(f, {p, q});
        plan.fixed[0] = e.u;
        plan.fixed[1] = e.v;
        tasks.push_back({plans.size(), e.u});
        plans.push_back(std::move(plan));
      }
    }
  } else if (!residual_vertices.empty()) {
    // Each map covering r sends exactly one pattern vertex onto it.
    const Vertex r = residual_vertices.front();
    residual_vertices.erase(residual_vertices.begin());
    for (Vertex p = 0; p < f.order(); ++p) {
      auto plan = detail::make_plan(f, {p});
      plan.fixed[0] = r;
      tasks.push_back({plans.size(), r});
      plans.push_back(std::move(plan));
    }
  } else {
    Vertex start = 0;
    for (Vertex p = 1; p < f.order(); ++p)
      if (f.degree(p) > f.degree(start))
        start = p;
    plans.push_back(detail::make_plan(f, {start}));
    allowed.for_each([&](Vertex v) { tasks.push_back({0, v}); });
  }

  MonomorphismTally out;
  if (opts.per_vertex)
    out.per_vertex.assign(g.order(), 0);
  if (f.order() > g.order() || tasks.empty())
    return out;

  const unsigned workers = std::max(1U, std::min<unsigned>(opts.workers, static_cast<unsigned>(tasks.size())));
  std::vector<detail::Searcher> searchers;
  searchers.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    searchers.emplace_back(f, g, plans, allowed, residual_vertices, residual_edges, opts);

  std::atomic<std::size_t> next{0};
  auto drain = [&](detail::Searcher &s) {
    for (std::size_t i = next++; i < tasks.size(); i = next++)
      s.run(tasks[i]);
  };
  if (workers == 1) {
    drain(searchers[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] { drain(searchers[w]); });
  }

  for (auto &s : searchers) {
    out.total += s.tally().total;
    if (opts.per_vertex)
      for (Vertex v = 0; v < g.order(); ++v)
        out.per_vertex[v] += s.tally().per_vertex[v];
  }
  return out;
}

/// |Aut(f)|, computed as the number of monomorphisms of f into itself.
inline auto automorphism_count(const Graph &f) -> Count {
  if (f.order() > kMaxPatternOrder)
    throw std::invalid_argument("automorphism_count: pattern order " + std::to_string(f.order()) +
                                " exceeds the bound " + std::to_string(kMaxPatternOrder));
  CountOptions opts;
  opts.per_vertex = false;
  return Count::from_u128(count_monomorphisms(f, f, {}, opts).total);
}

/// A pattern graph together with the order of its automorphism group.
class Pattern {
public:
  explicit Pattern(Graph f) : graph_(std::move(f)), aut_(automorphism_count(graph_)) {}

  auto graph() const -> const Graph & { return graph_; }
  auto order() const -> std::size_t { return graph_.order(); }
  auto aut_count() const -> const Count & { return aut_; }

private:
  Graph graph_;
  Count aut_;
};

struct DegreeProfile {
  std::vector<Count> counts;  // by host vertex index
  int label_offset = 0;
  Count total_copies;

  auto at_label(long long label) const -> const Count & {
    const long long idx = label - label_offset;
    if (idx < 0 || static_cast<std::size_t>(idx) >= counts.size())
      throw std::out_of_range("DegreeProfile: label " + std::to_string(label) + " not present");
    return counts[static_cast<std::size_t>(idx)];
  }
  auto size() const -> std::size_t { return counts.size(); }

  /// sum_v Fdeg(v) == |F| * copies.
  auto sum_identity_holds(std::size_t pattern_order) const -> bool {
    Count sum;
    for (const Count &c : counts)
      sum += c;
    return sum == Count{pattern_order} * total_copies;
  }
};

inline auto count_copies(const Pattern &f, const Graph &g, const CopyConstraints &c = {},
                         CountOptions opts = {}) -> Count {
  opts.per_vertex = false;
  const auto tally = count_monomorphisms(f.graph(), g, c, opts);
  return divide_exact(Count::from_u128(tally.total), f.aut_count());
}

/// Copies containing each host vertex (and meeting c), all from one pass.
inline auto degree_profile(const Pattern &f, const Graph &g, const CopyConstraints &c = {}, CountOptions opts = {})
    -> DegreeProfile {
  opts.per_vertex = true;
  const auto tally = count_monomorphisms(f.graph(), g, c, opts);
  DegreeProfile out;
  out.label_offset = g.label_offset();
  out.total_copies = divide_exact(Count::from_u128(tally.total), f.aut_count());
  out.counts.reserve(g.order());
  for (Wide m : tally.per_vertex)
    out.counts.push_back(divide_exact(Count::from_u128(m), f.aut_count()));
  return out;
}

inline auto f_degree(const Pattern &f, const Graph &g, Vertex v, CountOptions opts = {}) -> Count {
  g.check_vertex(v);
  auto c = CopyConstraints::for_host(g);
  c.require(v);
  return count_copies(f, g, c, opts);
}

}  // namespace firreg
