#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trsbound/term.hpp"

namespace trsbound {

/// A rewrite rule lhs -> rhs.  Valid rules have a non-variable lhs and
/// var(rhs) contained in var(lhs).
struct Rule {
  Term lhs;
  Term rhs;

  bool operator==(const Rule& other) const {
    return lhs == other.lhs && rhs == other.rhs;
  }
};

/// A term rewriting system: a signature plus an ordered list of rules.
///
/// Construction validates every rule (non-variable lhs, right-hand variables
/// bound on the left, arity-correct terms) and renumbers each rule's
/// variables canonically by first occurrence in the lhs, so structurally
/// equal rules are variants of each other.
class Trs {
 public:
  Trs() = default;
  Trs(Signature sig, std::vector<Rule> rules);

  const Signature& signature() const { return sig_; }
  const std::vector<Rule>& rules() const { return rules_; }
  int n_rules() const { return static_cast<int>(rules_.size()); }
  const Rule& rule(int i) const { return rules_.at(i); }

  /// Index of a rule structurally equal to r (post-canonicalization), or -1.
  int find_rule(const Rule& r) const;

  bool operator==(const Trs& other) const {
    return sig_ == other.sig_ && rules_ == other.rules_;
  }

 private:
  Signature sig_;
  std::vector<Rule> rules_;
};

/// Renumbers the rule's variables by first occurrence in the lhs.
Rule canonicalize_rule(const Rule& r);

/// Union of two signatures, merged by name; an arity clash is an error.
/// Symbols of a keep their order, new symbols of b follow.
Signature signature_union(const Signature& a, const Signature& b);

/// The same rules re-expressed over sig, which must declare every symbol of
/// the system's own signature with the same arity.
Trs with_signature(const Trs& trs, const Signature& sig);

/// Validates r against sig; throws RuleError / SignatureError.
void validate_rule(const Rule& r, const Signature& sig);

enum class Strategy {
  LeftmostInnermost,
  LeftmostOutermost,
};

std::string to_string(Strategy s);

/// The degree of the system: gcd over all rules and variables of
/// |count(x_i, lhs) - count(x_i, rhs)|, with gcd of an empty or all-zero
/// family defined as 0.  Selects the coefficient ring (0 -> integers,
/// prime d -> integers mod d); composite degrees have no ring.
long long degree(const Trs& trs);

struct RewriteStep {
  Term result;
  int rule;      // 0-based index into trs.rules()
  Position pos;  // where the redex was contracted
};

/// The unique next step of the deterministic strategy, or nullopt when t is
/// a normal form.  Ties between rules at the same position go to the lowest
/// rule index.  LeftmostInnermost picks the leftmost redex none of whose
/// proper subterms is a redex; LeftmostOutermost picks the first redex in
/// outermost-first, left-to-right order.
std::optional<RewriteStep> rewrite_step(const Trs& trs, const Term& t, Strategy strategy);

/// True iff no rule rewrites any subterm of t (strategy-independent).
bool is_normal_form(const Trs& trs, const Term& t);

struct NormalizationTrace {
  Term normal_form;
  std::vector<long long> usage;  // usage[j] = times rule j was applied
  long long steps = 0;           // equals the sum of usage
};

/// Rewrites t to its strategy normal form, counting rule usages.  Throws
/// StepBudgetError when more than max_steps steps would be needed.
NormalizationTrace normalize_counted(const Trs& trs, const Term& t, Strategy strategy,
                                     long long max_steps);

}  // namespace trsbound
