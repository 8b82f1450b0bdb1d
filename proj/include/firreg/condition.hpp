#pragma once

/**
 * The <n,t>-condition on the scale parameter l:
 *
 *   t = 1:  l > (n! + 1)(n - 1)
 *   t >= 2: l > 2t  and  C(l-2, n-2) > n! * C(l-1, n-t-1)
 *
 * plus the three inequalities it implies (l > n, C(l-1,n-1) > n! C(l-1,n-t-1),
 * C(l-2,n-2) > n! C(l-2,n-t-2)). Everything is evaluated exactly.
 */

#include "firreg/constructions.hpp"
#include "firreg/count.hpp"

#include <array>
#include <optional>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace firreg {

/// One evaluated strict inequality lhs > rhs.
struct StrictInequality {
  std::string expression;
  Count lhs;
  Count rhs;
  bool holds = false;
};

enum class ConditionBranch { kPendant, kGeneral };  // t = 1, t >= 2

struct ConditionReport {
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t l = 0;
  bool holds = false;
  ConditionBranch branch = ConditionBranch::kPendant;
  std::optional<StrictInequality> scale_clause;  // l > 2t, t >= 2 only
  StrictInequality decisive;
  std::array<StrictInequality, 3> lemma13;
};

namespace detail {

inline void require_pair(std::size_t n, std::size_t t) {
  if (t < 1 || t + 2 > n)
    throw PreconditionError("condition: need 1 <= t <= n - 2, got n = " + std::to_string(n) +
                            ", t = " + std::to_string(t));
}

inline auto strict(std::string expr, Count lhs, Count rhs) -> StrictInequality {
  const bool holds = lhs > rhs;
  return {std::move(expr), std::move(lhs), std::move(rhs), holds};
}

inline auto ll(std::size_t v) -> std::int64_t { return static_cast<std::int64_t>(v); }

inline auto lemma13_inequalities(std::size_t n, std::size_t t, std::size_t l) -> std::array<StrictInequality, 3> {
  const Count nf = factorial(n);
  return {
      strict("l > n", Count{l}, Count{n}),
      strict("C(l-1,n-1) > n! C(l-1,n-t-1)", binomial(ll(l) - 1, ll(n) - 1),
             nf * binomial(ll(l) - 1, ll(n) - ll(t) - 1)),
      strict("C(l-2,n-2) > n! C(l-2,n-t-2)", binomial(ll(l) - 2, ll(n) - 2),
             nf * binomial(ll(l) - 2, ll(n) - ll(t) - 2)),
  };
}

}  // namespace detail

inline auto check_condition(std::size_t n, std::size_t t, std::size_t l) -> ConditionReport {
  detail::require_pair(n, t);
  using detail::ll;
  ConditionReport r;
  r.n = n;
  r.t = t;
  r.l = l;
  const Count nf = factorial(n);
  if (t == 1) {
    r.branch = ConditionBranch::kPendant;
    r.decisive = detail::strict("l > (n!+1)(n-1)", Count{l}, (nf + Count{1}) * Count{n - 1});
    r.holds = r.decisive.holds;
  } else {
    r.branch = ConditionBranch::kGeneral;
    r.scale_clause = detail::strict("l > 2t", Count{l}, Count{2 * t});
    r.decisive = detail::strict("C(l-2,n-2) > n! C(l-1,n-t-1)", binomial(ll(l) - 2, ll(n) - 2),
                                nf * binomial(ll(l) - 1, ll(n) - ll(t) - 1));
    r.holds = r.scale_clause->holds && r.decisive.holds;
  }
  r.lemma13 = detail::lemma13_inequalities(n, t, l);
  return r;
}

/// The three consequences of the condition; l must satisfy it.
inline auto check_lemma13(std::size_t n, std::size_t t, std::size_t l) -> std::array<StrictInequality, 3> {
  if (!check_condition(n, t, l).holds)
    throw PreconditionError("check_lemma13: l = " + std::to_string(l) + " does not satisfy the <" +
                            std::to_string(n) + "," + std::to_string(t) + ">-condition");
  return detail::lemma13_inequalities(n, t, l);
}

inline auto min_l(std::size_t n, std::size_t t) -> std::size_t {
  detail::require_pair(n, t);
  if (t == 1) {
    const Count bound = (factorial(n) + Count{1}) * Count{n - 1};
    const std::size_t l = static_cast<std::size_t>(bound.to_u64()) + 1;
    if (!check_condition(n, t, l).holds || check_condition(n, t, l - 1).holds)
      throw std::logic_error("min_l: closed form disagrees with check_condition");
    return l;
  }
  for (std::size_t l = 2;; ++l)
    if (check_condition(n, t, l).holds)
      return l;
}

inline auto enumerate_valid_l(std::size_t n, std::size_t t, std::size_t count) -> std::vector<std::size_t> {
  std::vector<std::size_t> out;
  for (std::size_t l = min_l(n, t); out.size() < count; ++l)
    if (check_condition(n, t, l).holds)
      out.push_back(l);
  return out;
}

inline auto to_string(ConditionBranch b) -> std::string { return b == ConditionBranch::kPendant ? "t=1" : "t>=2"; }

}  // namespace firreg
