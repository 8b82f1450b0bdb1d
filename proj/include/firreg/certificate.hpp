#pragma once

// Evidence container: every checked (in)equality with both sides exact.

#include "firreg/constructions.hpp"
#include "firreg/count.hpp"

#include "json.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace firreg {

enum class Relation { kEq, kNe, kLt, kLe, kGt, kGe };

inline auto symbol(Relation r) -> const char * {
  switch (r) {
  case Relation::kEq: return "=";
  case Relation::kNe: return "!=";
  case Relation::kLt: return "<";
  case Relation::kLe: return "<=";
  case Relation::kGt: return ">";
  case Relation::kGe: return ">=";
  }
  return "?";
}

inline auto evaluate(const Count &lhs, Relation r, const Count &rhs) -> bool {
  switch (r) {
  case Relation::kEq: return lhs == rhs;
  case Relation::kNe: return lhs != rhs;
  case Relation::kLt: return lhs < rhs;
  case Relation::kLe: return lhs <= rhs;
  case Relation::kGt: return lhs > rhs;
  case Relation::kGe: return lhs >= rhs;
  }
  return false;
}

struct Check {
  std::string name;
  std::string statement;  // e.g. "lemma5.2"
  Count lhs;
  Count rhs;
  Relation relation = Relation::kEq;
  bool pass = false;
  bool vacuous = false;
  double seconds = 0.0;
};

struct Collision {
  long long u = 0;
  long long v = 0;
  Count value;
};

class Certificate {
public:
  std::string kind;
  std::optional<ConstructionParams> params;
  std::string pattern;              // graph6
  std::optional<std::string> host;  // graph6, when the host is not a construction
  std::vector<Check> checks;
  std::vector<Collision> collisions;

  auto overall() const -> bool {
    for (const Check &c : checks)
      if (!c.pass)
        return false;
    return true;
  }

  auto add(std::string statement, std::string name, Count lhs, Relation r, Count rhs) -> const Check & {
    Check c;
    c.statement = std::move(statement);
    c.name = std::move(name);
    c.pass = evaluate(lhs, r, rhs);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.relation = r;
    c.seconds = lap();
    checks.push_back(std::move(c));
    return checks.back();
  }

  /// Records a statement whose index range is empty.
  void add_vacuous(std::string statement, std::string name) {
    Check c;
    c.statement = std::move(statement);
    c.name = std::move(name);
    c.pass = true;
    c.vacuous = true;
    c.seconds = lap();
    checks.push_back(std::move(c));
  }

  void append(const Certificate &other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    collisions.insert(collisions.end(), other.collisions.begin(), other.collisions.end());
  }

  auto failures() const -> std::vector<const Check *> {
    std::vector<const Check *> out;
    for (const Check &c : checks)
      if (!c.pass)
        out.push_back(&c);
    return out;
  }

  /// Restart the per-check clock (time spent before this is not attributed).
  void restart_clock() { last_ = std::chrono::steady_clock::now(); }

private:
  auto lap() -> double {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline auto params_json(const ConstructionParams &p) -> nlohmann::ordered_json {
  return {{"n", p.n}, {"t", p.t}, {"l", p.l}};
}

/// Stable key order; counts as decimal strings. Timing is the only
/// run-dependent field and can be left out.
inline auto to_json(const Certificate &c, bool with_timing = true) -> nlohmann::ordered_json {
  nlohmann::ordered_json j;
  j["kind"] = c.kind;
  j["params"] = c.params ? params_json(*c.params) : nlohmann::ordered_json(nullptr);
  j["pattern"] = c.pattern;
  if (c.host)
    j["host"] = *c.host;
  auto checks = nlohmann::ordered_json::array();
  for (const Check &k : c.checks) {
    nlohmann::ordered_json e;
    e["name"] = k.name;
    e["statement"] = k.statement;
    if (k.vacuous) {
      e["lhs"] = nullptr;
      e["rhs"] = nullptr;
      e["relation"] = nullptr;
    } else {
      e["lhs"] = k.lhs.str();
      e["rhs"] = k.rhs.str();
      e["relation"] = symbol(k.relation);
    }
    e["pass"] = k.pass;
    e["vacuous"] = k.vacuous;
    if (with_timing)
      e["seconds"] = k.seconds;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  if (!c.collisions.empty() || c.kind == "irregularity") {
    auto coll = nlohmann::ordered_json::array();
    for (const Collision &x : c.collisions)
      coll.push_back({{"u", x.u}, {"v", x.v}, {"count", x.value.str()}});
    j["collisions"] = std::move(coll);
  }
  j["overall"] = c.overall();
  return j;
}

}  // namespace firreg
