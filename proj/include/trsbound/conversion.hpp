#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trsbound/trs.hpp"

namespace trsbound {

/// Verdict of a bounded convertibility question t <->* s.
enum class Reachability { Connected, Disconnected, Unknown };

std::string to_string(Reachability r);

struct ConversionLimits {
  /// Maximum number of congruence-graph nodes before giving up.
  long long node_budget = 50000;
  /// Safety stop on saturation rounds.
  int max_rounds = 200;
  /// Unbound rule variables are instantiated only with classes whose
  /// smallest known member has at most this many nodes.
  int instantiation_size_cap = 6;
  /// Per-round cap on instantiations performed for one rule direction.
  long long per_direction_round_cap = 5000;
};

struct ConversionOutcome {
  Reachability status = Reachability::Unknown;
  long long nodes = 0;  // graph size when the run settled
  int rounds = 0;
};

/// Decides t <->* s under the symmetric closure of the rules for every goal
/// pair at once, by bounded congruence saturation: a congruence graph seeded
/// with the goal terms is closed under both orientations of every rule until
/// the goals merge, the budget runs out, or nothing changes.
///
/// Connected is exact (every merge is justified by rewrite steps).
/// Disconnected is only reported when a true fixpoint was reached and no
/// rule direction with unbound variables ever matched, which makes the
/// closure provably complete.  Everything else is Unknown.
std::vector<ConversionOutcome> convertible(const Trs& moves,
                                           const std::vector<std::pair<Term, Term>>& goals,
                                           const ConversionLimits& limits = {});

enum class Equivalence { Yes, No, Unknown };

std::string to_string(Equivalence e);

/// Condition (a): a candidate rule's sides must share a base normal form.
struct CandidateRuleCheck {
  int rule = 0;  // 0-based index into candidate.rules()
  bool holds = false;
  bool budget_exhausted = false;  // normalization did not finish
  Term nf_lhs;
  Term nf_rhs;
};

/// Condition (b): a base rule's sides must be convertible under the
/// candidate rules.
struct BaseRuleCheck {
  int rule = 0;  // 0-based index into base.rules()
  Reachability status = Reachability::Unknown;
};

struct EquivReport {
  Equivalence verdict = Equivalence::Unknown;
  std::vector<CandidateRuleCheck> candidate_checks;
  std::vector<BaseRuleCheck> base_checks;
  std::string detail;
};

/// Do base and candidate present the same congruence on terms?
///
/// base must be complete (checked by the caller; the CLI verifies it).  The
/// verdict is Yes when every candidate rule joins under base and every base
/// rule is convertible under the candidate; No when a candidate rule's base
/// normal forms differ or some base rule is provably not convertible;
/// Unknown when a budget ran out first.  Neither Yes nor No is ever guessed.
EquivReport equiv_check(const Trs& base, const Trs& candidate, Strategy strategy,
                        long long max_steps, const ConversionLimits& limits = {});

}  // namespace trsbound
