#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trsbound/critical_pairs.hpp"
#include "trsbound/smith.hpp"
#include "trsbound/trs.hpp"

namespace trsbound {

/// Rule-usage matrix D of a complete system: one row per rule, one column
/// per critical pair.  With t_i / s_i the outer / inner reducts of pair i
/// and nr_j(u) the number of times rule j is used when normalizing u under
/// the chosen strategy, entry (j, i) is
///
///   nr_j(s_i) - nr_j(t_i) + [inner_i == j] - [outer_i == j].
///
/// Throws NotCompleteError if some pair does not join, StepBudgetError if a
/// normalization exceeds max_steps.
IntMatrix build_D(const Trs& trs, const std::vector<CriticalPeak>& cps, Strategy strategy,
                  long long max_steps);

/// Signature incidence row: one column per symbol f, entry arity(f) - 1.
IntMatrix build_d0(const Signature& sig);

/// Symbol-count boundary: one column per rule, column j is
/// symbol_counts(rhs_j) - symbol_counts(lhs_j).
IntMatrix build_d1(const Trs& trs);

struct CompletenessInfo {
  int cps_checked = 0;
  bool all_joinable = true;
};

struct AnalyzeOptions {
  Strategy strategy = Strategy::LeftmostInnermost;
  bool prime_only = false;       // restrict D to prime critical pairs
  long long max_steps = 100000;  // per-normalization rewrite budget
  bool verify_snf = false;       // recompute with transforms and check U*A*V
  std::string system_name;       // label echoed into reports
};

/// Everything the analysis produces.  lower_bound = n_rules - e is a lower
/// bound on the rule count of every rewriting system presenting the same
/// theory; s_h2 = n_rules - e - rank_d1 is the matching bound derived from
/// the second homology of the presented monoid.
struct BoundReport {
  std::string system_name;
  int n_rules = 0;
  int n_symbols = 0;
  Strategy strategy = Strategy::LeftmostInnermost;
  long long max_steps = 0;
  long long degree = 0;
  Ring ring;
  int n_cps_total = 0;
  int n_cps_used = 0;
  bool prime_only = false;
  CompletenessInfo completeness;
  IntMatrix D;                      // n_rules x n_cps_used
  SnfResult snf_D;                  // integer Smith form of D
  std::optional<int> rank_D_mod_p;  // set when the ring is a prime field
  int e = 0;
  int lower_bound = 0;
  int rank_d1 = 0;
  int s_h2 = 0;
  int s_h1 = 0;  // informational companion invariant
  bool snf_verified = false;
};

/// Full pipeline: degree and ring selection, critical pairs, completeness
/// gate, D, Smith reduction, e, the bound, and both homology sizes.
///
/// Throws CompositeDegreeError when the degree is composite,
/// NotCompleteError when some critical pair does not join, StepBudgetError
/// when a normalization budget is exhausted.
BoundReport analyze(const Trs& trs, const AnalyzeOptions& opts = {});

/// Minimal generating-set size of Z^free_rank + sum of cyclic groups of the
/// given torsion orders: free_rank + number of torsion divisors.  Torsion
/// divisors must be >= 2.
int s_of_group(int free_rank, const std::vector<Int>& torsion_divisors);

/// Size invariant of the first homology: over the integers, computed from
/// the integer kernel of d0 and the image of d1 inside it; over GF(p),
/// nullity(d0) - rank(d1).
int s_h1_of(const Trs& trs, const Ring& ring);

/// Rank of d1 over the given ring (integer rank, or rank mod p).
int rank_d1_of(const Trs& trs, const Ring& ring);

/// Ring selected by the degree: integers for 0, GF(d) for prime d; throws
/// CompositeDegreeError otherwise.
Ring ring_for_degree(long long degree);

}  // namespace trsbound
