#include "trsbound/tietze.hpp"

#include "trsbound/errors.hpp"

namespace trsbound {

namespace {

// Establishes t <->* s under trs: joinability by strategy normalization
// first (sound whenever both normalizations finish), then bounded
// conversion saturation.
bool derivable(const Trs& trs, const Term& t, const Term& s, const TietzeOptions& opts) {
  try {
    Term nf_t = normalize_counted(trs, t, opts.strategy, opts.max_steps).normal_form;
    Term nf_s = normalize_counted(trs, s, opts.strategy, opts.max_steps).normal_form;
    if (nf_t == nf_s) return true;
  } catch (const StepBudgetError&) {
    // fall through to the conversion search
  }
  std::vector<ConversionOutcome> out = convertible(trs, {{t, s}}, opts.limits);
  return out.at(0).status == Reachability::Connected;
}

[[noreturn]] void fail(int step_no, const std::string& msg) {
  throw TietzeError(step_no, "step " + std::to_string(step_no) + ": " + msg);
}

Trs apply_add_symbol(const Trs& trs, const TietzeStep& step, int step_no) {
  if (!step.definition) fail(step_no, "add-symbol needs a defining term");
  if (trs.signature().find(step.symbol_name))
    fail(step_no, "symbol '" + step.symbol_name + "' already exists");
  if (step.arity < 0) fail(step_no, "negative arity");
  const Term& t = *step.definition;
  if (t.is_var()) fail(step_no, "the defining term must not be a variable");
  if (max_var_index(t) > step.arity)
    fail(step_no, "the defining term uses variables beyond x" + std::to_string(step.arity));

  Signature sig = trs.signature();
  SymbolId f = sig.add(step.symbol_name, step.arity);
  std::vector<Term> vars;
  vars.reserve(step.arity);
  for (int i = 1; i <= step.arity; ++i) vars.push_back(Term::var(i));
  std::vector<Rule> rules = trs.rules();
  rules.push_back(Rule{t, Term::app(f, std::move(vars))});
  return Trs(std::move(sig), std::move(rules));
}

Trs apply_remove_symbol(const Trs& trs, const TietzeStep& step, int step_no) {
  auto f = trs.signature().find(step.symbol_name);
  if (!f) fail(step_no, "unknown symbol '" + step.symbol_name + "'");
  const int arity = trs.signature().at(*f).arity;

  // The defining rule is t -> f(x1,...,xn) with f-free t; f may occur in no
  // other rule (which also makes the defining rule unique).
  std::vector<Term> vars;
  for (int i = 1; i <= arity; ++i) vars.push_back(Term::var(i));
  const Term fx = Term::app(*f, std::move(vars));
  int defining = -1;
  for (int i = 0; i < trs.n_rules(); ++i) {
    const Rule& r = trs.rule(i);
    bool uses_f = symbol_count(r.lhs, *f) > 0 || symbol_count(r.rhs, *f) > 0;
    if (r.rhs == fx && symbol_count(r.lhs, *f) == 0) {
      if (defining >= 0)
        fail(step_no, "symbol '" + step.symbol_name + "' has more than one defining rule");
      defining = i;
      continue;
    }
    if (uses_f)
      fail(step_no, "symbol '" + step.symbol_name + "' still occurs in rule " +
                        std::to_string(i + 1));
  }
  if (defining < 0)
    fail(step_no, "no defining rule t -> " + step.symbol_name + "(x1..xn) found");

  Signature sig;
  for (const Symbol& s : trs.signature().symbols())
    if (s.name != step.symbol_name) sig.add(s.name, s.arity);
  std::vector<Rule> rules;
  for (int i = 0; i < trs.n_rules(); ++i)
    if (i != defining) rules.push_back(trs.rule(i));
  return with_signature(Trs(trs.signature(), std::move(rules)), sig);
}

Trs apply_add_rule(const Trs& trs, const TietzeStep& step, const TietzeOptions& opts,
                   int step_no) {
  if (!step.lhs || !step.rhs) fail(step_no, "add-rule needs both sides");
  Rule r{*step.lhs, *step.rhs};
  try {
    validate_rule(r, trs.signature());
  } catch (const Error& e) {
    fail(step_no, e.what());
  }
  if (!derivable(trs, r.lhs, r.rhs, opts))
    fail(step_no, "could not establish that the new rule's sides are convertible "
                  "under the current rules (within the budgets)");
  std::vector<Rule> rules = trs.rules();
  rules.push_back(std::move(r));
  return Trs(trs.signature(), std::move(rules));
}

Trs apply_remove_rule(const Trs& trs, const TietzeStep& step, const TietzeOptions& opts,
                      int step_no) {
  if (!step.lhs || !step.rhs) fail(step_no, "remove-rule needs both sides");
  int idx = trs.find_rule(Rule{*step.lhs, *step.rhs});
  if (idx < 0) fail(step_no, "no such rule in the system");
  std::vector<Rule> rules;
  for (int i = 0; i < trs.n_rules(); ++i)
    if (i != idx) rules.push_back(trs.rule(i));
  Trs rest(trs.signature(), std::move(rules));
  if (!derivable(rest, trs.rule(idx).lhs, trs.rule(idx).rhs, opts))
    fail(step_no, "could not establish that the removed rule stays derivable from the "
                  "remaining rules (within the budgets)");
  return rest;
}

}  // namespace

Trs tietze_apply(const Trs& trs, const TietzeStep& step, const TietzeOptions& opts,
                 int step_no) {
  switch (step.kind) {
    case TietzeKind::AddSymbol:
      return apply_add_symbol(trs, step, step_no);
    case TietzeKind::RemoveSymbol:
      return apply_remove_symbol(trs, step, step_no);
    case TietzeKind::AddRule:
      return apply_add_rule(trs, step, opts, step_no);
    case TietzeKind::RemoveRule:
      return apply_remove_rule(trs, step, opts, step_no);
  }
  throw TietzeError(step_no, "unknown transformation kind");
}

Trs tietze_apply(const Trs& trs, const std::vector<TietzeStep>& steps,
                 const TietzeOptions& opts) {
  Trs current = trs;
  for (std::size_t i = 0; i < steps.size(); ++i)
    current = tietze_apply(current, steps[i], opts, static_cast<int>(i) + 1);
  return current;
}

}  // namespace trsbound
