#include "trsbound/trs.hpp"

#include <numeric>

#include "trsbound/errors.hpp"

namespace trsbound {

namespace {

void check_arities(const Term& t, const Signature& sig) {
  if (t.is_var()) return;
  const Symbol& sym = sig.at(t.symbol());
  if (sym.arity != static_cast<int>(t.args().size()))
    throw SignatureError("term applies '" + sym.name + "' to " +
                         std::to_string(t.args().size()) + " argument(s); arity is " +
                         std::to_string(sym.arity));
  for (const Term& a : t.args()) check_arities(a, sig);
}

void first_occurrences(const Term& t, std::vector<int>& order) {
  if (t.is_var()) {
    for (int seen : order)
      if (seen == t.var_index()) return;
    order.push_back(t.var_index());
    return;
  }
  for (const Term& a : t.args()) first_occurrences(a, order);
}

}  // namespace

Rule canonicalize_rule(const Rule& r) {
  std::vector<int> order;
  first_occurrences(r.lhs, order);
  first_occurrences(r.rhs, order);  // rhs-only variables (invalid rules) still renumber
  Substitution renaming;
  for (std::size_t k = 0; k < order.size(); ++k)
    renaming.bind(order[k], Term::var(static_cast<int>(k) + 1));
  return Rule{apply_subst(r.lhs, renaming), apply_subst(r.rhs, renaming)};
}

void validate_rule(const Rule& r, const Signature& sig) {
  if (r.lhs.is_var()) throw RuleError("rule left-hand side must not be a variable");
  check_arities(r.lhs, sig);
  check_arities(r.rhs, sig);
  auto left = var_counts(r.lhs);
  for (const auto& [v, n] : var_counts(r.rhs)) {
    (void)n;
    if (!left.count(v))
      throw RuleError("right-hand side variable x" + std::to_string(v) +
                      " does not occur in the left-hand side");
  }
}

Trs::Trs(Signature sig, std::vector<Rule> rules) : sig_(std::move(sig)) {
  rules_.reserve(rules.size());
  for (const Rule& r : rules) {
    validate_rule(r, sig_);
    rules_.push_back(canonicalize_rule(r));
  }
}

int Trs::find_rule(const Rule& r) const {
  Rule c = canonicalize_rule(r);
  for (int i = 0; i < n_rules(); ++i)
    if (rules_[i] == c) return i;
  return -1;
}

Signature signature_union(const Signature& a, const Signature& b) {
  Signature out;
  for (const Symbol& s : a.symbols()) out.add(s.name, s.arity);
  for (const Symbol& s : b.symbols()) out.intern(s.name, s.arity);
  return out;
}

namespace {

Term remap_term(const Term& t, const Signature& from, const Signature& to) {
  if (t.is_var()) return t;
  const Symbol& sym = from.at(t.symbol());
  auto id = to.find(sym.name);
  if (!id || to.at(*id).arity != sym.arity)
    throw SignatureError("target signature lacks symbol '" + sym.name + "/" +
                         std::to_string(sym.arity) + "'");
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(remap_term(a, from, to));
  return Term::app(*id, std::move(args));
}

}  // namespace

Trs with_signature(const Trs& trs, const Signature& sig) {
  std::vector<Rule> rules;
  rules.reserve(trs.rules().size());
  for (const Rule& r : trs.rules())
    rules.push_back(Rule{remap_term(r.lhs, trs.signature(), sig),
                         remap_term(r.rhs, trs.signature(), sig)});
  return Trs(sig, std::move(rules));
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::LeftmostInnermost:
      return "leftmost-innermost";
    case Strategy::LeftmostOutermost:
      return "leftmost-outermost";
  }
  return "?";
}

long long degree(const Trs& trs) {
  long long g = 0;
  for (const Rule& r : trs.rules()) {
    auto left = var_counts(r.lhs);
    auto right = var_counts(r.rhs);
    for (const auto& [v, n] : left) {
      auto it = right.find(v);
      long long diff = n - (it == right.end() ? 0 : it->second);
      g = std::gcd(g, diff < 0 ? -diff : diff);
    }
    // Valid rules have var(rhs) within var(lhs), so the loop above covers all.
  }
  return g;
}

namespace {

// First rule (lowest index) whose lhs matches t at the root.
std::optional<RewriteStep> root_step(const Trs& trs, const Term& t) {
  for (int j = 0; j < trs.n_rules(); ++j) {
    if (auto s = match_term(trs.rule(j).lhs, t))
      return RewriteStep{apply_subst(trs.rule(j).rhs, *s), j, {}};
  }
  return std::nullopt;
}

std::optional<RewriteStep> innermost_step(const Trs& trs, const Term& t) {
  if (t.is_var()) return std::nullopt;
  const std::vector<Term>& as = t.args();
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (auto sub = innermost_step(trs, as[i])) {
      std::vector<Term> out = as;
      out[i] = std::move(sub->result);
      Position pos;
      pos.reserve(sub->pos.size() + 1);
      pos.push_back(static_cast<int>(i) + 1);
      pos.insert(pos.end(), sub->pos.begin(), sub->pos.end());
      return RewriteStep{Term::app(t.symbol(), std::move(out)), sub->rule, std::move(pos)};
    }
  }
  return root_step(trs, t);
}

std::optional<RewriteStep> outermost_step(const Trs& trs, const Term& t) {
  if (t.is_var()) return std::nullopt;
  if (auto step = root_step(trs, t)) return step;
  const std::vector<Term>& as = t.args();
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (auto sub = outermost_step(trs, as[i])) {
      std::vector<Term> out = as;
      out[i] = std::move(sub->result);
      Position pos;
      pos.reserve(sub->pos.size() + 1);
      pos.push_back(static_cast<int>(i) + 1);
      pos.insert(pos.end(), sub->pos.begin(), sub->pos.end());
      return RewriteStep{Term::app(t.symbol(), std::move(out)), sub->rule, std::move(pos)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<RewriteStep> rewrite_step(const Trs& trs, const Term& t, Strategy strategy) {
  switch (strategy) {
    case Strategy::LeftmostInnermost:
      return innermost_step(trs, t);
    case Strategy::LeftmostOutermost:
      return outermost_step(trs, t);
  }
  return std::nullopt;
}

bool is_normal_form(const Trs& trs, const Term& t) {
  return !rewrite_step(trs, t, Strategy::LeftmostInnermost).has_value();
}

NormalizationTrace normalize_counted(const Trs& trs, const Term& t, Strategy strategy,
                                     long long max_steps) {
  NormalizationTrace trace;
  trace.normal_form = t;
  trace.usage.assign(trs.n_rules(), 0);
  while (auto step = rewrite_step(trs, trace.normal_form, strategy)) {
    if (trace.steps >= max_steps)
      throw StepBudgetError("normalization exceeded the step budget of " +
                            std::to_string(max_steps));
    trace.normal_form = std::move(step->result);
    ++trace.usage[step->rule];
    ++trace.steps;
  }
  return trace;
}

}  // namespace trsbound
