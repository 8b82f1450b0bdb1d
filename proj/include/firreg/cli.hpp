#pragma once

/**
 * Command-line front end. run() is the whole program minus main(), so tests
 * can drive it with captured streams.
 *
 * Exit status: 0 success / pass, 1 verified failure (collision found,
 * oracle disagreement, nothing found), 2 usage or input error.
 */

#include "firreg/certificate.hpp"
#include "firreg/condition.hpp"
#include "firreg/constructions.hpp"
#include "firreg/counting.hpp"
#include "firreg/graph.hpp"
#include "firreg/graph6.hpp"
#include "firreg/hyper.hpp"
#include "firreg/oracle.hpp"
#include "firreg/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace firreg::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Built-in patterns: every diameter-2 graph of order <= 4, plus a few
/// small graphs handy for experiments.
namespace detail {
inline auto resolve_graph_raw(const std::string &token) -> Graph;
}

inline auto builtin_patterns() -> const std::map<std::string, Graph> & {
  static const std::map<std::string, Graph> table = {
      {"P3", Graph(3, {{0, 1}, {1, 2}})},
      {"C4", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})},
      {"K13", Graph(4, {{0, 1}, {0, 2}, {0, 3}})},
      {"paw", Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})},
      {"diamond", Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})},
      {"K2", Graph(2, {{0, 1}})},
      {"K3", Graph(3, {{0, 1}, {1, 2}, {0, 2}})},
      {"K4", Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})},
      {"P4", Graph(4, {{0, 1}, {1, 2}, {2, 3}})},
      {"C5", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})},
  };
  return table;
}

inline auto detail::resolve_graph_raw(const std::string &token) -> Graph {
  const auto &table = builtin_patterns();
  if (auto it = table.find(token); it != table.end())
    return it->second;
  std::error_code ec;
  if (std::filesystem::is_regular_file(token, ec)) {
    std::ifstream in(token);
    if (!in)
      throw InputError("cannot read file '" + token + "'");
    try {
      auto graphs = read_graph6_stream(in);
      if (graphs.empty())
        throw InputError("file '" + token + "' contains no graph6 records");
      return graphs.front();
    } catch (const Graph6Error &e) {
      throw InputError("file '" + token + "': " + e.what());
    }
  }
  try {
    return parse_graph6(token);
  } catch (const Graph6Error &e) {
    throw InputError("'" + token + "' is not a built-in pattern, a readable file, or graph6 text (" + e.what() +
                     ")");
  }
}

/// Built-in name, graph6 file (first graph), or literal graph6 text.
/// Vertices are reported with 1-based labels, like the constructions.
inline auto resolve_graph(const std::string &token) -> Graph {
  return detail::resolve_graph_raw(token).with_label_offset(1);
}

struct RunConfig {
  std::string subcommand;
  std::string pattern;
  std::string host;
  std::string construct;  // A, F2l, X, Xminus, H
  std::vector<std::string> patterns;
  std::optional<std::size_t> n, t, l, i;
  bool auto_l = false;
  unsigned workers = 1;
  bool oracle_check = false;
  bool induced = false;
  bool no_aggregate = false;
  std::string output;
  std::string labels;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::size_t order = 6;
  std::string mode = "exhaustive";
  std::size_t budget = 0;
  std::size_t pairs = 200;
  std::size_t hyper_n = 3;
  bool no_padding = false;
  bool stop_early = false;
  std::string atlas_out;

  auto options() const -> CountOptions {
    CountOptions o;
    o.workers = workers;
    o.aggregate_leaves = !no_aggregate;
    return o;
  }
};

namespace detail {

using json = nlohmann::ordered_json;

inline void emit(const RunConfig &cfg, std::ostream &out, const std::string &text) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f)
    throw InputError("cannot write '" + cfg.output + "'");
  f << text;
}

inline void emit_json(const RunConfig &cfg, std::ostream &out, const json &j) { emit(cfg, out, j.dump(2) + "\n"); }

inline auto inequality_json(const StrictInequality &s) -> json {
  return {{"expression", s.expression}, {"lhs", s.lhs.str()}, {"rhs", s.rhs.str()}, {"holds", s.holds}};
}

inline auto condition_json(const ConditionReport &r) -> json {
  json j;
  j["n"] = r.n;
  j["t"] = r.t;
  j["l"] = r.l;
  j["holds"] = r.holds;
  j["branch"] = to_string(r.branch);
  j["scale_clause"] = r.scale_clause ? inequality_json(*r.scale_clause) : json(nullptr);
  j["decisive"] = inequality_json(r.decisive);
  auto l13 = json::array();
  for (const auto &s : r.lemma13)
    l13.push_back(inequality_json(s));
  j["lemma13"] = std::move(l13);
  return j;
}

inline auto profile_json(const DegreeProfile &p) -> json {
  json j = json::object();
  for (std::size_t v = 0; v < p.size(); ++v)
    j[std::to_string(static_cast<long long>(v) + p.label_offset)] = p.counts[v].str();
  return j;
}

/// (n, t, l) from the pattern (or --n/--t) and --l / --auto-l.
inline auto resolve_params(const RunConfig &cfg, const std::optional<Graph> &pattern) -> ConstructionParams {
  ConstructionParams p;
  if (pattern) {
    p = derive_params(*pattern);
  } else {
    if (!cfg.n || !cfg.t)
      throw InputError("need --pattern or both --n and --t");
    p.n = *cfg.n;
    p.t = *cfg.t;
  }
  if (cfg.auto_l)
    p.l = min_l(p.n, p.t);
  else if (cfg.l)
    p.l = *cfg.l;
  else
    throw InputError("need --l or --auto-l");
  p.validate();
  return p;
}

inline auto construct_graph(const RunConfig &cfg, const std::optional<Graph> &pattern)
    -> std::pair<Graph, std::vector<long long>> {
  auto labels_of = [](const Graph &g) {
    std::vector<long long> out;
    for (Vertex v = 0; v < g.order(); ++v)
      out.push_back(g.label(v));
    return out;
  };
  auto origin_labels = [](const InducedSubgraph &s) {
    std::vector<long long> out;
    for (Vertex v : s.origin)
      out.push_back(static_cast<long long>(v) + 1);
    return out;
  };
  const std::string &kind = cfg.construct;
  if (kind == "A" || kind == "H") {
    std::size_t l = 0;
    if (cfg.l)
      l = *cfg.l;
    else if (cfg.auto_l)
      l = resolve_params(cfg, pattern).l;
    else
      throw InputError("construct " + kind + ": need --l or --auto-l");
    if (kind == "A") {
      Graph g = build_A(l);
      return {g, labels_of(g)};
    }
    if (!cfg.i)
      throw InputError("construct H: need --i");
    Graph g = build_H(l, *cfg.i);
    return {g, labels_of(g)};
  }
  const ConstructionParams p = resolve_params(cfg, pattern);
  if (kind == "F2l") {
    Graph g = build_F2l(p);
    return {g, labels_of(g)};
  }
  if (kind == "X") {
    InducedSubgraph x = build_X(p);
    return {x.graph, origin_labels(x)};
  }
  if (kind == "Xminus") {
    if (!cfg.i)
      throw InputError("construct Xminus: need --i");
    InducedSubgraph x = build_X_minus(p, *cfg.i);
    return {x.graph, origin_labels(x)};
  }
  throw InputError("unknown construction '" + kind + "' (expected A, F2l, X, Xminus, H)");
}

inline auto optional_pattern(const RunConfig &cfg) -> std::optional<Graph> {
  if (cfg.pattern.empty())
    return std::nullopt;
  return resolve_graph(cfg.pattern);
}

inline auto required_pattern(const RunConfig &cfg) -> Graph {
  if (cfg.pattern.empty())
    throw InputError(cfg.subcommand + ": --pattern is required");
  return resolve_graph(cfg.pattern);
}

inline auto run_min_l(const RunConfig &cfg, std::ostream &out) -> int {
  if (!cfg.n || !cfg.t)
    throw InputError("min-l: need --n and --t");
  const std::size_t l = min_l(*cfg.n, *cfg.t);
  json j;
  j["n"] = *cfg.n;
  j["t"] = *cfg.t;
  j["min_l"] = l;
  j["report"] = condition_json(check_condition(*cfg.n, *cfg.t, l));
  if (cfg.count > 1)
    j["valid_l"] = enumerate_valid_l(*cfg.n, *cfg.t, cfg.count);
  emit_json(cfg, out, j);
  return kOk;
}

inline auto run_construct(const RunConfig &cfg, std::ostream &out) -> int {
  if (cfg.construct.empty())
    throw InputError("construct: need --graph");
  const auto pattern = optional_pattern(cfg);
  auto [g, labels] = construct_graph(cfg, pattern);
  emit(cfg, out, emit_graph6(g) + "\n");
  if (!cfg.labels.empty()) {
    json j;
    j["graph"] = cfg.construct;
    j["order"] = g.order();
    j["labels"] = labels;  // labels[i] = label of graph6 vertex i
    std::ofstream f(cfg.labels);
    if (!f)
      throw InputError("cannot write '" + cfg.labels + "'");
    f << j.dump(2) << "\n";
  }
  return kOk;
}

inline auto host_graph(const RunConfig &cfg, const std::optional<Graph> &pattern) -> Graph {
  if (!cfg.host.empty() && !cfg.construct.empty())
    throw InputError("use either --host or --construct, not both");
  if (!cfg.host.empty())
    return resolve_graph(cfg.host);
  if (!cfg.construct.empty()) {
    auto [g, labels] = construct_graph(cfg, pattern);
    return g;
  }
  throw InputError(cfg.subcommand + ": need --host or --construct");
}

inline auto run_fdeg(const RunConfig &cfg, std::ostream &out, std::ostream &err) -> int {
  const Graph f = required_pattern(cfg);
  const Graph g = host_graph(cfg, f);
  const Pattern pat(f);
  const DegreeProfile prof = degree_profile(pat, g, {}, cfg.options());
  json j;
  if (cfg.induced) {
    CountOptions o = cfg.options();
    o.induced = true;
    j["noninduced"] = profile_json(prof);
    j["induced"] = profile_json(degree_profile(pat, g, {}, o));
  } else {
    j = profile_json(prof);
  }
  emit_json(cfg, out, j);
  if (cfg.oracle_check) {
    if (g.order() > kOracleMaxHostOrder) {
      err << "oracle-check: host order " << g.order() << " exceeds oracle bound " << kOracleMaxHostOrder << "\n";
      return kUsage;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      auto c = CopyConstraints::for_host(g);
      c.require(v);
      const Count oracle = oracle_count_copies(f, g, c);
      if (oracle != prof.counts[v]) {
        err << "oracle disagreement at label " << g.label(v) << ": engine " << prof.counts[v] << ", oracle "
            << oracle << "\n";
        return kFailure;
      }
    }
  }
  return kOk;
}

inline auto run_certify(const RunConfig &cfg, std::ostream &out) -> int {
  const Graph f = required_pattern(cfg);
  const Pattern pat(f);
  Certificate cert;
  if (!cfg.host.empty()) {
    cert = certify_irregular(pat, resolve_graph(cfg.host), cfg.options());
  } else {
    const ConstructionParams p = resolve_params(cfg, f);
    cert = certify_instance(analyze(pat, p, cfg.options()));
  }
  emit_json(cfg, out, to_json(cert));
  return cert.overall() ? kOk : kFailure;
}

inline auto run_verify_lemmas(const RunConfig &cfg, std::ostream &out) -> int {
  const Graph f = required_pattern(cfg);
  const ConstructionParams p = resolve_params(cfg, f);
  const Instance in = analyze(Pattern(f), p, cfg.options());
  Certificate cert;
  cert.kind = "lemmas";
  cert.params = p;
  cert.pattern = emit_graph6(f);
  cert.append(verify_A_lemmas(in));
  cert.append(verify_F2l_lemmas(in));
  emit_json(cfg, out, to_json(cert));
  return cert.overall() ? kOk : kFailure;
}

inline auto run_floor_diagram(const RunConfig &cfg, std::ostream &out) -> int {
  const Graph f = required_pattern(cfg);
  const ConstructionParams p = resolve_params(cfg, f);
  const FloorDiagram d = floor_diagram(analyze(Pattern(f), p, cfg.options()));
  emit_json(cfg, out, to_json(d));
  return d.overall() ? kOk : kFailure;
}

inline auto run_remark1(const RunConfig &cfg, std::ostream &out) -> int {
  if (cfg.patterns.empty())
    throw InputError("remark1: need --patterns");
  std::vector<Graph> hs;
  for (const auto &tok : cfg.patterns)
    hs.push_back(resolve_graph(tok));
  RunConfig c = cfg;
  std::optional<Graph> first;
  if (!cfg.n || !cfg.t)
    first = hs.front();
  const ConstructionParams p = resolve_params(c, first);
  const Certificate cert = verify_remark1(p, hs, cfg.options());
  emit_json(cfg, out, to_json(cert));
  return cert.overall() ? kOk : kFailure;
}

inline auto run_hyper(const RunConfig &cfg, std::ostream &out) -> int {
  const PatternAtlas atlas = build_atlas(cfg.hyper_n, !cfg.no_padding);
  if (!cfg.atlas_out.empty()) {
    std::ofstream f(cfg.atlas_out);
    if (!f)
      throw InputError("cannot write '" + cfg.atlas_out + "'");
    for (const Graph &g : atlas.patterns)
      f << emit_graph6(g) << "\n";
  }
  if (cfg.host.empty()) {
    if (cfg.atlas_out.empty())
      throw InputError("hyper: need --host (or --atlas-out to only export the atlas)");
    return kOk;
  }
  const Graph g = resolve_graph(cfg.host);
  const HyperVerdict v = is_hyper_irregular(g, atlas, cfg.options(), cfg.stop_early);
  json j;
  j["host"] = emit_graph6(g);
  j["n"] = v.n;
  j["include_padded"] = atlas.include_padded;
  j["atlas_size"] = atlas.patterns.size();
  j["hyper_irregular"] = v.hyper_irregular;
  if (v.witness) {
    const auto &w = *v.witness;
    json wj;
    wj["pattern"] = w.pattern;
    if (!w.collisions.empty()) {
      wj["u"] = w.collisions.front().u;
      wj["v"] = w.collisions.front().v;
      wj["count"] = w.collisions.front().value.str();
    }
    j["witness"] = std::move(wj);
  } else {
    j["witness"] = nullptr;
  }
  auto per = json::array();
  for (const auto &pv : v.per_pattern)
    per.push_back({{"pattern", pv.pattern}, {"irregular", pv.irregular}, {"profile", profile_json(pv.profile)}});
  j["patterns"] = std::move(per);
  emit_json(cfg, out, j);
  return v.hyper_irregular ? kOk : kFailure;
}

inline auto run_search_p3(const RunConfig &cfg, std::ostream &out) -> int {
  SearchMode mode;
  if (cfg.mode == "exhaustive")
    mode = SearchMode::kExhaustive;
  else if (cfg.mode == "random")
    mode = SearchMode::kRandom;
  else
    throw InputError("search-p3: unknown --mode '" + cfg.mode + "' (expected exhaustive or random)");
  const SearchReport rep = search_p3_irregular(cfg.order, mode, cfg.budget, cfg.seed);
  json j;
  j["order"] = rep.order;
  j["mode"] = to_string(rep.mode);
  j["seed"] = rep.seed;
  j["budget"] = rep.budget;
  j["visited"] = rep.visited;
  j["exhausted"] = rep.exhausted;
  if (rep.found) {
    j["found"] = emit_graph6(*rep.found);
    j["profile"] = profile_json(degree_profile(Pattern(Graph(3, {{0, 1}, {1, 2}})), *rep.found));
  } else {
    j["found"] = nullptr;
  }
  emit_json(cfg, out, j);
  return rep.found ? kOk : kFailure;
}

inline auto run_oracle_check(const RunConfig &cfg, std::ostream &out) -> int {
  const OracleRunReport rep = oracle_equivalence_run(cfg.pairs, cfg.seed, 9, 5, cfg.options());
  json j;
  j["pairs"] = rep.pairs;
  j["comparisons"] = rep.comparisons;
  j["disconnected_patterns"] = rep.disconnected_patterns;
  j["shapes"] = rep.shape_counts;
  auto mm = json::array();
  for (const auto &m : rep.mismatches)
    mm.push_back({{"pattern", m.pattern},
                  {"host", m.host},
                  {"shape", m.shape},
                  {"engine", m.engine.str()},
                  {"oracle", m.oracle.str()}});
  j["mismatches"] = std::move(mm);
  j["ok"] = rep.ok();
  emit_json(cfg, out, j);
  return rep.ok() ? kOk : kFailure;
}

}  // namespace detail

inline auto run(const RunConfig &cfg, std::ostream &out, std::ostream &err) -> int {
  const std::string &s = cfg.subcommand;
  if (s == "min-l")
    return detail::run_min_l(cfg, out);
  if (s == "construct")
    return detail::run_construct(cfg, out);
  if (s == "fdeg")
    return detail::run_fdeg(cfg, out, err);
  if (s == "certify")
    return detail::run_certify(cfg, out);
  if (s == "verify-lemmas")
    return detail::run_verify_lemmas(cfg, out);
  if (s == "floor-diagram")
    return detail::run_floor_diagram(cfg, out);
  if (s == "remark1")
    return detail::run_remark1(cfg, out);
  if (s == "hyper")
    return detail::run_hyper(cfg, out);
  if (s == "search-p3")
    return detail::run_search_p3(cfg, out);
  if (s == "oracle-check")
    return detail::run_oracle_check(cfg, out);
  throw InputError("unknown subcommand '" + s + "'");
}

/// Parses argv into a RunConfig and runs it.
inline auto main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) -> int {
  RunConfig cfg;
  CLI::App app{"Constructions, exact F-degree counting and irregularity certificates"};
  app.require_subcommand(1);

  auto add_workers = [&](CLI::App *sub) {
    sub->add_option("--workers", cfg.workers, "Counting threads")->check(CLI::Range(1U, 256U));
    sub->add_flag("--no-aggregate", cfg.no_aggregate, "Visit every leaf instead of closing the last level by popcount");
    sub->add_option("-o,--output", cfg.output, "Write the primary output here instead of stdout");
  };
  auto add_params = [&](CLI::App *sub) {
    sub->add_option("--n", cfg.n, "Pattern order (when no --pattern)");
    sub->add_option("--t", cfg.t, "Pattern minimum degree (when no --pattern)");
    auto *l = sub->add_option("--l", cfg.l, "Scale parameter l");
    auto *a = sub->add_flag("--auto-l", cfg.auto_l, "Use the smallest l satisfying the condition");
    l->excludes(a);
    a->excludes(l);
  };

  auto *min_l_cmd = app.add_subcommand("min-l", "Smallest l satisfying the <n,t>-condition");
  min_l_cmd->add_option("--n", cfg.n)->required();
  min_l_cmd->add_option("--t", cfg.t)->required();
  min_l_cmd->add_option("--count", cfg.count, "Also list this many valid l values");
  min_l_cmd->add_option("-o,--output", cfg.output);

  auto *construct = app.add_subcommand("construct", "Emit A, F2l, X, Xminus or H as graph6");
  construct->add_option("--graph", cfg.construct, "A | F2l | X | Xminus | H")->required();
  construct->add_option("--pattern", cfg.pattern, "Pattern (built-in name, graph6 file or text)");
  construct->add_option("--i", cfg.i, "Label parameter for Xminus / H");
  construct->add_option("--labels", cfg.labels, "Write a JSON label map here");
  add_params(construct);
  construct->add_option("-o,--output", cfg.output);

  auto *fdeg = app.add_subcommand("fdeg", "Per-vertex F-degrees as JSON");
  fdeg->add_option("--pattern", cfg.pattern)->required();
  fdeg->add_option("--host", cfg.host, "Host (built-in name, graph6 file or text)");
  fdeg->add_option("--construct", cfg.construct, "Build the host: A | F2l | X | Xminus | H");
  fdeg->add_option("--i", cfg.i);
  fdeg->add_flag("--induced", cfg.induced, "Also report induced-copy counts");
  fdeg->add_flag("--oracle-check", cfg.oracle_check, "Cross-check every vertex against the brute-force oracle");
  add_params(fdeg);
  add_workers(fdeg);

  auto *certify = app.add_subcommand("certify", "Full certificate for F_2l (or irregularity of --host)");
  certify->add_option("--pattern", cfg.pattern)->required();
  certify->add_option("--host", cfg.host, "Certify this host instead of the construction");
  add_params(certify);
  add_workers(certify);

  auto *lemmas = app.add_subcommand("verify-lemmas", "A_{2l-1} and F_2l lemma checks");
  lemmas->add_option("--pattern", cfg.pattern)->required();
  add_params(lemmas);
  add_workers(lemmas);

  auto *floor = app.add_subcommand("floor-diagram", "Floor table of F-degrees before and after the jump");
  floor->add_option("--pattern", cfg.pattern)->required();
  add_params(floor);
  add_workers(floor);

  auto *remark = app.add_subcommand("remark1", "One F_2l against several patterns of equal (n, t)");
  remark->add_option("--patterns", cfg.patterns, "Comma-separated patterns")->delimiter(',')->required();
  add_params(remark);
  add_workers(remark);

  auto *hyper = app.add_subcommand("hyper", "n-hyper-irregularity of a host");
  hyper->add_option("--host", cfg.host);
  hyper->add_option("--n", cfg.hyper_n, "Maximum pattern order (3..6)")->required();
  hyper->add_flag("--no-padding", cfg.no_padding, "Leave out patterns with isolated vertices");
  hyper->add_flag("--stop-early", cfg.stop_early, "Stop at the first pattern that collides");
  hyper->add_option("--atlas-out", cfg.atlas_out, "Write the pattern atlas as graph6 lines");
  add_workers(hyper);

  auto *search = app.add_subcommand("search-p3", "Find a graph with pairwise distinct P3-degrees");
  search->add_option("--order", cfg.order)->required();
  search->add_option("--mode", cfg.mode, "exhaustive | random");
  search->add_option("--seed", cfg.seed);
  search->add_option("--budget", cfg.budget, "Graphs to try (0 = all, exhaustive only)");
  search->add_option("-o,--output", cfg.output);

  auto *oracle = app.add_subcommand("oracle-check", "Engine vs brute-force oracle on random pairs");
  oracle->add_option("--pairs", cfg.pairs);
  oracle->add_option("--seed", cfg.seed);
  add_workers(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  for (const auto *sub : app.get_subcommands())
    cfg.subcommand = sub->get_name();

  try {
    return run(cfg, out, err);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace firreg::cli
