#pragma once

/**
 * Instance-level verification of the F_{2l} irregularity argument.
 *
 * Notation used in check names (labels are 1-based):
 *   z_i   F-degree of label i in A_{2l-1}
 *   f_i   F-degree of label i in F_{2l}
 *   d_i   jump f_i - z_i
 *   L     copies of F in F_{2l} through vertex 2l
 *
 * Every check is evaluated on exact counts; proof-internal objects (the
 * sets M and K, the witnesses L_1 and M_1) are checked through constrained
 * copy counts.
 */

#include "firreg/certificate.hpp"
#include "firreg/condition.hpp"
#include "firreg/constructions.hpp"
#include "firreg/count.hpp"
#include "firreg/counting.hpp"
#include "firreg/graph.hpp"
#include "firreg/graph6.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace firreg {

/// Everything the verifiers need about one (F, n, t, l) instance, computed once.
struct Instance {
  Pattern pattern;
  ConstructionParams params;
  Graph a;
  Graph f2l;
  DegreeProfile z;        // over A_{2l-1}
  DegreeProfile f;        // over F_{2l}
  DegreeProfile through;  // per-vertex count of L-copies (copies through 2l)
  CountOptions options;

  auto z_at(std::size_t label) const -> const Count & { return z.at_label(static_cast<long long>(label)); }
  auto f_at(std::size_t label) const -> const Count & { return f.at_label(static_cast<long long>(label)); }
  auto top() const -> const Count & { return f_at(2 * params.l); }
  auto jump(std::size_t label) const -> Count { return checked_sub(f_at(label), z_at(label)); }
};

/// Per-label jumps d_i for labels 1..2l-1.
struct JumpProfile {
  std::vector<Count> jumps;  // jumps[i - 1] = d_i

  auto at_label(std::size_t label) const -> const Count & { return jumps.at(label - 1); }
};

inline auto analyze(const Pattern &f, const ConstructionParams &p, CountOptions opts = {}) -> Instance {
  p.validate();
  Graph a = build_A(p.l);
  Graph f2l = build_F2l(p);
  DegreeProfile z = degree_profile(f, a, {}, opts);
  DegreeProfile fp = degree_profile(f, f2l, {}, opts);
  auto c = CopyConstraints::for_host(f2l);
  c.require(2 * p.l - 1);
  DegreeProfile through = degree_profile(f, f2l, c, opts);
  return {f, p, std::move(a), std::move(f2l), std::move(z), std::move(fp), std::move(through), opts};
}

inline auto jump_profile(const Instance &in) -> JumpProfile {
  JumpProfile out;
  for (std::size_t i = 1; i <= 2 * in.params.l - 1; ++i) {
    if (in.f_at(i) < in.z_at(i))
      throw std::logic_error("jump_profile: negative jump at label " + std::to_string(i));
    out.jumps.push_back(in.jump(i));
  }
  return out;
}

inline auto jump_profile(const Pattern &f, const ConstructionParams &p, CountOptions opts = {}) -> JumpProfile {
  return jump_profile(analyze(f, p, opts));
}

namespace detail {

inline auto lbl(const char *sym, std::size_t i) -> std::string { return std::string(sym) + "_" + std::to_string(i); }

inline auto sym_diff_size(const VertexSet &a, const VertexSet &b) -> std::size_t {
  return (a | b).count() - (a & b).count();
}

}  // namespace detail

/// F-irregularity: all F-degrees pairwise distinct.
inline auto certify_irregular(const Pattern &f, const DegreeProfile &profile) -> Certificate {
  Certificate cert;
  cert.kind = "irregularity";
  cert.pattern = emit_graph6(f.graph());
  std::vector<std::size_t> idx(profile.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return profile.counts[x] < profile.counts[y]; });
  auto label = [&](std::size_t i) { return static_cast<long long>(i) + profile.label_offset; };
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
    const std::size_t u = idx[k];
    const std::size_t v = idx[k + 1];
    cert.add("definition2", "Fdeg(" + std::to_string(label(u)) + ") < Fdeg(" + std::to_string(label(v)) + ")",
             profile.counts[u], Relation::kLt, profile.counts[v]);
  }
  // Every colliding pair, grouped by shared value.
  for (std::size_t k = 0; k < idx.size();) {
    std::size_t e = k;
    while (e < idx.size() && profile.counts[idx[e]] == profile.counts[idx[k]])
      ++e;
    std::vector<std::size_t> group(idx.begin() + static_cast<std::ptrdiff_t>(k),
                                   idx.begin() + static_cast<std::ptrdiff_t>(e));
    std::sort(group.begin(), group.end());
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b)
        cert.collisions.push_back({label(group[a]), label(group[b]), profile.counts[group[a]]});
    k = e;
  }
  std::sort(cert.collisions.begin(), cert.collisions.end(),
            [](const Collision &x, const Collision &y) { return std::pair{x.u, x.v} < std::pair{y.u, y.v}; });
  return cert;
}

inline auto certify_irregular(const Pattern &f, const Graph &g, CountOptions opts = {}) -> Certificate {
  Certificate cert = certify_irregular(f, degree_profile(f, g, {}, opts));
  cert.host = emit_graph6(g);
  return cert;
}

/// Lemma 1, Lemma 2 (with its set M), Corollary 1 on the z-profile.
inline auto verify_A_lemmas(const Instance &in) -> Certificate {
  const auto &p = in.params;
  const std::size_t l = p.l;
  const auto n = static_cast<std::int64_t>(p.n);
  Certificate cert;
  cert.kind = "A-lemmas";
  cert.params = p;
  cert.pattern = emit_graph6(in.pattern.graph());
  cert.restart_clock();

  for (std::size_t i = 1; i <= 2 * l - 1; ++i)
    cert.add("lemma1", detail::lbl("z", i) + " = " + detail::lbl("z", 2 * l - i), in.z_at(i), Relation::kEq,
             in.z_at(2 * l - i));

  const Count gap = binomial(static_cast<std::int64_t>(l) - 2, n - 2);
  for (std::size_t i = 1; i + 1 <= l; ++i) {
    cert.add("lemma2", detail::lbl("z", i + 1) + " >= " + detail::lbl("z", i) + " + C(l-2,n-2)", in.z_at(i + 1),
             Relation::kGe, in.z_at(i) + gap);

    const Graph h = build_H(l, i);
    cert.add("lemma2.H", "|N_H[" + std::to_string(i) + "] xor N_H[" + std::to_string(i + 1) + "]| = 0",
             Count{detail::sym_diff_size(closed_neighborhood(h, i - 1), closed_neighborhood(h, i))}, Relation::kEq,
             Count{0});

    auto m = CopyConstraints::for_host(in.a);
    m.require_edge(i, l + i - 1).forbid(i - 1);
    const Count m_size = count_copies(in.pattern, in.a, m, in.options);
    cert.add("lemma2.M", detail::lbl("z", i) + " + |M| = " + detail::lbl("z", i + 1), in.z_at(i) + m_size,
             Relation::kEq, in.z_at(i + 1));
    cert.add("lemma2.M", "|M| >= C(l-2,n-2) for i = " + std::to_string(i), m_size, Relation::kGe, gap);
  }

  for (std::size_t i = 1; i + 1 <= l; ++i)
    cert.add("corollary1", detail::lbl("z", i) + " < " + detail::lbl("z", i + 1), in.z_at(i), Relation::kLt,
             in.z_at(i + 1));
  return cert;
}

/// Lemmas 3-11 (and the condition / Lemma 13 they rest on) for one instance.
inline auto verify_F2l_lemmas(const Instance &in) -> Certificate {
  const auto &p = in.params;
  const std::size_t l = p.l;
  const std::size_t t = p.t;
  const auto n = static_cast<std::int64_t>(p.n);
  const auto li = static_cast<std::int64_t>(l);
  const auto ti = static_cast<std::int64_t>(t);
  const ConditionReport cond = check_condition(p.n, t, l);
  if (!cond.holds)
    throw PreconditionError("verify_F2l_lemmas: l = " + std::to_string(l) + " does not satisfy the <" +
                            std::to_string(p.n) + "," + std::to_string(t) + ">-condition");

  Certificate cert;
  cert.kind = "F2l-lemmas";
  cert.params = p;
  cert.pattern = emit_graph6(in.pattern.graph());
  cert.restart_clock();

  if (cond.scale_clause)
    cert.add("definition11", cond.scale_clause->expression, cond.scale_clause->lhs, Relation::kGt,
             cond.scale_clause->rhs);
  cert.add("definition11", cond.decisive.expression, cond.decisive.lhs, Relation::kGt, cond.decisive.rhs);
  for (std::size_t k = 0; k < 3; ++k)
    cert.add("lemma13." + std::to_string(k + 1), cond.lemma13[k].expression, cond.lemma13[k].lhs, Relation::kGt,
             cond.lemma13[k].rhs);

  // Lemma 3: diameter 3, with labels l+t..2l-1 exactly at distance 3 from 2l.
  const auto diam = diameter(in.f2l);
  cert.add("lemma3", "diameter(F_2l) = 3", Count{diam ? *diam : 0}, Relation::kEq, Count{3});
  {
    const auto dist = distances_from(in.f2l, 2 * l - 1);
    std::size_t far = 0;
    for (std::size_t label = l + t; label <= 2 * l - 1; ++label)
      far += (dist[label - 1] && *dist[label - 1] == 3) ? 1 : 0;
    cert.add("lemma3", "#{labels l+t..2l-1 at distance 3 from 2l} = l - t", Count{far}, Relation::kEq,
             Count{l - t});
  }

  // Lemma 4: every copy through 2l uses edges (1,2l)..(t,2l) and lies inside X.
  {
    auto c = CopyConstraints::for_host(in.f2l);
    c.require(2 * l - 1);
    for (std::size_t k = 1; k <= t; ++k)
      c.require_edge(k - 1, 2 * l - 1);
    cert.add("lemma4.1", "#{copies through 2l using all edges (k,2l), k<=t} = f_2l",
             count_copies(in.pattern, in.f2l, c, in.options), Relation::kEq, in.top());
    const InducedSubgraph x = build_X(p);
    auto cx = CopyConstraints::for_host(x.graph);
    cx.require(x.graph.order() - 1);
    cert.add("lemma4.2", "#{copies of F in X through 2l} = f_2l", count_copies(in.pattern, x.graph, cx, in.options),
             Relation::kEq, in.top());
  }

  // Assertion 4: d_i equals the number of L-copies through i.
  for (std::size_t i = 1; i <= 2 * l - 1; ++i)
    cert.add("assertion4", detail::lbl("d", i) + " = #{L-copies through " + std::to_string(i) + "}", in.jump(i),
             Relation::kEq, in.through.at_label(static_cast<long long>(i)));

  // Lemma 5.
  for (std::size_t i = 1; i <= t; ++i)
    cert.add("lemma5.1", detail::lbl("d", i) + " = f_2l", in.jump(i), Relation::kEq, in.top());
  for (std::size_t i = t + 1; i <= l; ++i)
    cert.add("lemma5.2", detail::lbl("d", i) + " = " + detail::lbl("d", l), in.jump(i), Relation::kEq, in.jump(l));
  for (std::size_t i = l + t; i <= 2 * l - 1; ++i)
    cert.add("lemma5.3", detail::lbl("d", i) + " = 0", in.jump(i), Relation::kEq, Count{0});

  const Count nf = factorial(p.n);
  cert.add("lemma6", "f_2l <= n! C(l-1,n-t-1)", in.top(), Relation::kLe, nf * binomial(li - 1, n - ti - 1));
  cert.add("lemma7", "d_l <= n! C(l-2,n-t-2)", in.jump(l), Relation::kLe, nf * binomial(li - 2, n - ti - 2));

  cert.add("lemma8", "z_1 >= C(l-1,n-1)", in.z_at(1), Relation::kGe, binomial(li - 1, n - 1));
  cert.add("lemma8", "f_2l < z_1", in.top(), Relation::kLt, in.z_at(1));

  cert.add("lemma9", "f_2l > 0", in.top(), Relation::kGt, Count{0});
  for (std::size_t i = 1; i <= t; ++i)
    cert.add("lemma9", "f_2l + " + detail::lbl("z", i) + " < " + detail::lbl("z", i + 1), in.top() + in.z_at(i),
             Relation::kLt, in.z_at(i + 1));
  if (t == 1) {
    // M: copies in F_2l through edge (2, l+1) avoiding 1 and 2l; |M| = z_2 - z_1 and |L| < |M|.
    auto m = CopyConstraints::for_host(in.f2l);
    m.require_edge(1, l).forbid(0).forbid(2 * l - 1);
    const Count m_size = count_copies(in.pattern, in.f2l, m, in.options);
    cert.add("lemma9.M", "z_1 + |M| = z_2", in.z_at(1) + m_size, Relation::kEq, in.z_at(2));
    cert.add("lemma9.M", "|L| < |M|", in.top(), Relation::kLt, m_size);

    // M_1: on {2..n, l+1}, label l+1 pendant at 2.
    VertexSet s(in.f2l.order());
    for (std::size_t label = 2; label <= p.n; ++label)
      s.set(label - 1);
    s.set(l);
    InducedSubgraph w = induced_subgraph(in.f2l, s);
    const Vertex pendant = w.graph.order() - 1;
    for (Vertex j = 1; j + 1 < w.graph.order(); ++j)
      w.graph = delete_edge(w.graph, j, pendant);
    auto cw = CopyConstraints::for_host(w.graph);
    cw.require_edge(0, pendant);
    cert.add("lemma9.M1", "#{copies on {2..n, l+1} with l+1 pendant at 2} >= 1",
             count_copies(in.pattern, w.graph, cw, in.options), Relation::kGe, Count{1});
  }

  cert.add("lemma10", "d_l > 0", in.jump(l), Relation::kGt, Count{0});
  {
    // L_1: on {1..n-2, l, 2l} using edges (1,2l)..(t,2l) and (1,l).
    VertexSet s(in.f2l.order());
    for (std::size_t label = 1; label + 2 <= p.n; ++label)
      s.set(label - 1);
    s.set(l - 1);
    s.set(2 * l - 1);
    const InducedSubgraph w = induced_subgraph(in.f2l, s);
    const Vertex top = w.graph.order() - 1;
    const Vertex lv = w.graph.order() - 2;
    auto cw = CopyConstraints::for_host(w.graph);
    for (std::size_t k = 1; k <= t; ++k)
      cw.require_edge(k - 1, top);
    cw.require_edge(0, lv);
    cert.add("lemma10.L1", "#{copies on {1..n-2, l, 2l} using (1,2l)..(t,2l), (1,l)} >= 1",
             count_copies(in.pattern, w.graph, cw, in.options), Relation::kGe, Count{1});
  }
  for (std::size_t i = t + 1; i + 1 <= l; ++i)
    cert.add("lemma10", "d_l + " + detail::lbl("z", i) + " < " + detail::lbl("z", i + 1), in.jump(l) + in.z_at(i),
             Relation::kLt, in.z_at(i + 1));

  if (t < 2) {
    cert.add_vacuous("lemma11", "d_i < d_l for i in l+1..l+t-1 (empty range, t = 1)");
  } else {
    const InducedSubgraph x = build_X(p);
    const Vertex x_top = x.graph.order() - 1;
    for (std::size_t i = l + 1; i <= l + t - 1; ++i) {
      cert.add("lemma11", detail::lbl("d", i) + " < " + detail::lbl("d", l), in.jump(i), Relation::kLt, in.jump(l));

      // K = copies in X through l, 2l, avoiding i, using one of (1,l)..(i-l,l).
      const InducedSubgraph xm = build_X_minus(p, i);
      auto cons = [&](const Graph &g) {
        auto c = CopyConstraints::for_host(g);
        c.require(l - 1).require(x_top).forbid(i - 1);
        return c;
      };
      const Count in_x = count_copies(in.pattern, x.graph, cons(x.graph), in.options);
      const Count in_xm = count_copies(in.pattern, xm.graph, cons(xm.graph), in.options);
      const Count k_size = checked_sub(in_x, in_xm);
      cert.add("lemma11.X-", "|N_X-[" + std::to_string(i) + "] xor N_X-[" + std::to_string(l) + "]| = 0",
               Count{detail::sym_diff_size(closed_neighborhood(xm.graph, i - 1), closed_neighborhood(xm.graph, l - 1))},
               Relation::kEq, Count{0});
      cert.add("lemma11.K", detail::lbl("d", i) + " + |K| = " + detail::lbl("d", l), in.jump(i) + k_size,
               Relation::kEq, in.jump(l));
      cert.add("lemma11.K", "|K| >= 1 for i = " + std::to_string(i), k_size, Relation::kGe, Count{1});
    }
  }
  return cert;
}

inline auto verify_A_lemmas(const Pattern &f, const ConstructionParams &p, CountOptions opts = {}) -> Certificate {
  return verify_A_lemmas(analyze(f, p, opts));
}

inline auto verify_F2l_lemmas(const Pattern &f, const ConstructionParams &p, CountOptions opts = {}) -> Certificate {
  const ConditionReport cond = check_condition(p.n, p.t, p.l);
  if (!cond.holds)
    throw PreconditionError("verify_F2l_lemmas: l = " + std::to_string(p.l) + " does not satisfy the condition");
  return verify_F2l_lemmas(analyze(f, p, opts));
}

enum class Color { kRed, kBlue, kGreen, kBlack };

inline auto to_string(Color c) -> std::string {
  switch (c) {
  case Color::kRed: return "red";
  case Color::kBlue: return "blue";
  case Color::kGreen: return "green";
  case Color::kBlack: return "black";
  }
  return "?";
}

inline auto color_of(const ConstructionParams &p, std::size_t label) -> Color {
  if (label <= p.t)
    return Color::kRed;
  if (label <= p.l)
    return Color::kBlue;
  if (label <= p.l + p.t - 1)
    return Color::kGreen;
  return Color::kBlack;
}

struct FloorResident {
  std::size_t label = 0;
  Color color = Color::kBlack;
  Count z;
  Count jump;
  Count f;
};

struct Floor {
  std::size_t index = 0;
  Count height;  // z of every resident
  std::vector<FloorResident> residents;
};

/// Floors 1..l of A_{2l-1} (floor i holds labels i and 2l-i) and where each
/// vertex ends up in F_{2l}.
struct FloorDiagram {
  ConstructionParams params;
  std::vector<Floor> floors;
  Count top_vertex_f;  // f_2l
  Certificate checks;

  auto overall() const -> bool { return checks.overall(); }
};

inline auto floor_diagram(const Instance &in) -> FloorDiagram {
  const auto &p = in.params;
  const std::size_t l = p.l;
  if (!check_condition(p.n, p.t, l).holds)
    throw PreconditionError("floor_diagram: l = " + std::to_string(l) + " does not satisfy the condition");

  FloorDiagram d;
  d.params = p;
  d.top_vertex_f = in.top();
  d.checks.kind = "floor-diagram";
  d.checks.params = p;
  d.checks.pattern = emit_graph6(in.pattern.graph());
  d.checks.restart_clock();
  auto &cert = d.checks;

  auto resident = [&](std::size_t label) {
    return FloorResident{label, color_of(p, label), in.z_at(label), in.jump(label), in.f_at(label)};
  };
  for (std::size_t i = 1; i <= l; ++i) {
    Floor fl;
    fl.index = i;
    fl.height = in.z_at(i);
    fl.residents.push_back(resident(i));
    if (i < l)
      fl.residents.push_back(resident(2 * l - i));
    d.floors.push_back(std::move(fl));
  }

  cert.add("theorem4.top", "f_2l < z_1 (2l below floor 1)", in.top(), Relation::kLt, in.z_at(1));
  for (const Floor &fl : d.floors) {
    const std::size_t i = fl.index;
    for (const FloorResident &r : fl.residents) {
      const std::string who = to_string(r.color) + " " + std::to_string(r.label);
      switch (r.color) {
      case Color::kRed:
      case Color::kBlue:
        cert.add("theorem4." + to_string(r.color), who + " rises: z < f", r.z, Relation::kLt, r.f);
        if (i < l)
          cert.add("theorem4." + to_string(r.color), who + " stays below floor " + std::to_string(i + 1), r.f,
                   Relation::kLt, in.z_at(i + 1));
        break;
      case Color::kBlack:
        cert.add("theorem4.black", who + " fixed: f = z", r.f, Relation::kEq, r.z);
        break;
      case Color::kGreen:
        cert.add("theorem4.green", who + " below blue " + std::to_string(i), r.f, Relation::kLt, in.f_at(i));
        cert.add("theorem4.green", who + " not below floor " + std::to_string(i), r.f, Relation::kGe, fl.height);
        break;
      }
    }
  }
  std::vector<Count> all = in.f.counts;
  std::sort(all.begin(), all.end());
  const auto distinct = static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  cert.add("theorem4", "#{distinct f-values} = 2l", Count{distinct}, Relation::kEq, Count{2 * l});
  return d;
}

inline auto to_json(const FloorDiagram &d, bool with_timing = true) -> nlohmann::ordered_json {
  nlohmann::ordered_json j;
  j["params"] = params_json(d.params);
  auto floors = nlohmann::ordered_json::array();
  for (const Floor &fl : d.floors) {
    nlohmann::ordered_json e;
    e["floor"] = fl.index;
    e["height"] = fl.height.str();
    auto rs = nlohmann::ordered_json::array();
    for (const FloorResident &r : fl.residents)
      rs.push_back({{"label", r.label},
                    {"color", to_string(r.color)},
                    {"z", r.z.str()},
                    {"jump", r.jump.str()},
                    {"f", r.f.str()}});
    e["residents"] = std::move(rs);
    floors.push_back(std::move(e));
  }
  j["floors"] = std::move(floors);
  j["top_vertex"] = {{"label", 2 * d.params.l}, {"f", d.top_vertex_f.str()}};
  j["checks"] = to_json(d.checks, with_timing);
  j["overall"] = d.overall();
  return j;
}

/// Certificate for F_{2l}(p) being H-irregular for each H of matching (n, t).
inline auto verify_remark1(const ConstructionParams &p, const std::vector<Graph> &patterns, CountOptions opts = {})
    -> Certificate {
  p.validate();
  for (const Graph &h : patterns) {
    const std::string code = emit_graph6(h);
    const auto d = diameter(h);
    if (!d || *d != 2)
      throw PreconditionError("verify_remark1: pattern " + code + " has diameter " +
                              (d ? std::to_string(*d) : std::string("inf")) + ", expected 2");
    if (h.order() != p.n)
      throw PreconditionError("verify_remark1: pattern " + code + " has order " + std::to_string(h.order()) +
                              ", expected n = " + std::to_string(p.n));
    if (min_degree(h) != p.t)
      throw PreconditionError("verify_remark1: pattern " + code + " has minimum degree " +
                              std::to_string(min_degree(h)) + ", expected t = " + std::to_string(p.t));
  }
  const Graph host = build_F2l(p);
  Certificate cert;
  cert.kind = "remark1";
  cert.params = p;
  for (const Graph &h : patterns) {
    const std::string code = emit_graph6(h);
    cert.pattern += (cert.pattern.empty() ? "" : ",") + code;
    Certificate one = certify_irregular(Pattern(h), host, opts);
    for (Check &c : one.checks)
      c.name = "[" + code + "] " + c.name;
    cert.append(one);
  }
  return cert;
}

/// Condition, Lemma 13, A- and F_{2l}-lemmas, floor placement and the
/// irregularity of F_{2l}, merged into one certificate.
inline auto certify_instance(const Instance &in) -> Certificate {
  Certificate cert;
  cert.kind = "theorem4-instance";
  cert.params = in.params;
  cert.pattern = emit_graph6(in.pattern.graph());
  cert.append(verify_A_lemmas(in));
  cert.append(verify_F2l_lemmas(in));
  cert.append(floor_diagram(in).checks);
  Certificate irr = certify_irregular(in.pattern, in.f);
  cert.append(irr);
  return cert;
}

}  // namespace firreg
