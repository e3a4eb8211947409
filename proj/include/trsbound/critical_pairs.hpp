#pragma once

#include <vector>

#include "trsbound/trs.hpp"

namespace trsbound {

/// A critical overlap: rule `inner` rewrites the subterm at `pos` of an
/// instance of rule `outer`'s left-hand side.
///
/// peak is the overlapped instance;
/// outer_reduct (t) is the peak rewritten by `outer` at the root;
/// inner_reduct (s) is the peak rewritten by `inner` at `pos`.
///
/// Convention (fixed by the anchored example counts): overlaps at the root
/// between distinct rules are enumerated once, with the lower-index rule as
/// `outer`; overlaps at proper positions are enumerated for every ordered
/// pair of rules, including a rule with itself; a rule overlapping itself at
/// the root is trivial and excluded.  Variables of each peak are renumbered
/// x1, x2, ... by first occurrence, left to right.
struct CriticalPeak {
  int outer;            // 0-based rule index (a)
  int inner;            // 0-based rule index (b)
  Position pos;         // non-variable position of outer's lhs; empty = root
  Term peak;
  Term outer_reduct;    // t
  Term inner_reduct;    // s
  Substitution mgu;     // unifier, over the renamed-apart variable space
};

/// All critical peaks of the system, ordered lexicographically by
/// (outer, inner, pos).
std::vector<CriticalPeak> critical_pairs(const Trs& trs);

/// A critical peak is prime when every proper subterm of the contracted
/// inner redex instance (the subterm of the peak at pos) is a normal form.
bool is_prime(const Trs& trs, const CriticalPeak& cp);

/// Keeps only the prime critical peaks, preserving order.
std::vector<CriticalPeak> cp_filter_prime(const Trs& trs, std::vector<CriticalPeak> cps);

struct JoinCheck {
  int cp = 0;          // index into the critical-pair list
  bool joinable = false;
  Term nf_outer;       // strategy normal form of the outer reduct
  Term nf_inner;       // strategy normal form of the inner reduct
};

struct ConfluenceReport {
  bool locally_confluent = true;
  std::vector<JoinCheck> checks;  // one entry per critical pair
};

/// Joins every critical pair by strategy normalization.  For terminating
/// systems this decides local confluence (and hence confluence).  Throws
/// StepBudgetError if some normalization exceeds max_steps.
ConfluenceReport local_confluence_check(const Trs& trs, Strategy strategy, long long max_steps);

}  // namespace trsbound
