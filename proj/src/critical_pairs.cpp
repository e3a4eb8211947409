#include "trsbound/critical_pairs.hpp"

#include <algorithm>

#include "trsbound/errors.hpp"

namespace trsbound {

namespace {

// Renumbers the variables of peak/t/s by first occurrence in the peak.
// Every variable of t and s occurs in the peak (both reducts instantiate
// rule right-hand sides whose variables occur on the left).
void renumber(CriticalPeak& cp) {
  std::vector<int> order;
  for (const Position& p : positions(cp.peak)) {
    Term sub = *subterm_at(cp.peak, p);
    if (sub.is_var() && std::find(order.begin(), order.end(), sub.var_index()) == order.end())
      order.push_back(sub.var_index());
  }
  Substitution renaming;
  for (std::size_t k = 0; k < order.size(); ++k)
    renaming.bind(order[k], Term::var(static_cast<int>(k) + 1));
  cp.peak = apply_subst(cp.peak, renaming);
  cp.outer_reduct = apply_subst(cp.outer_reduct, renaming);
  cp.inner_reduct = apply_subst(cp.inner_reduct, renaming);
  Substitution remapped;
  for (const auto& [v, u] : cp.mgu.bindings()) remapped.bind(v, apply_subst(u, renaming));
  cp.mgu = remapped;
}

}  // namespace

std::vector<CriticalPeak> critical_pairs(const Trs& trs) {
  std::vector<CriticalPeak> out;
  const int n = trs.n_rules();
  for (int a = 0; a < n; ++a) {
    const Rule& outer = trs.rule(a);
    const int offset = max_var_index(outer.lhs);
    const std::vector<Position> spots = fun_positions(outer.lhs);
    for (int b = 0; b < n; ++b) {
      const Rule inner{rename_apart(trs.rule(b).lhs, offset),
                       rename_apart(trs.rule(b).rhs, offset)};
      for (const Position& p : spots) {
        if (p.empty()) {
          // Root overlaps of distinct rules produce one peak; orient the
          // lower-index rule as outer.  A rule on itself at the root is the
          // trivial overlap.
          if (a >= b) continue;
        }
        Term at = *subterm_at(outer.lhs, p);
        auto sigma = unify(at, inner.lhs);
        if (!sigma) continue;
        CriticalPeak cp;
        cp.outer = a;
        cp.inner = b;
        cp.pos = p;
        cp.peak = apply_subst(outer.lhs, *sigma);
        cp.outer_reduct = apply_subst(outer.rhs, *sigma);
        cp.inner_reduct = replace_at(cp.peak, p, apply_subst(inner.rhs, *sigma));
        cp.mgu = *sigma;
        renumber(cp);
        out.push_back(std::move(cp));
      }
    }
  }
  return out;
}

bool is_prime(const Trs& trs, const CriticalPeak& cp) {
  Term redex = *subterm_at(cp.peak, cp.pos);
  for (const Position& q : positions(redex)) {
    if (q.empty()) continue;
    if (!is_normal_form(trs, *subterm_at(redex, q))) return false;
  }
  return true;
}

std::vector<CriticalPeak> cp_filter_prime(const Trs& trs, std::vector<CriticalPeak> cps) {
  std::vector<CriticalPeak> out;
  out.reserve(cps.size());
  for (CriticalPeak& cp : cps)
    if (is_prime(trs, cp)) out.push_back(std::move(cp));
  return out;
}

ConfluenceReport local_confluence_check(const Trs& trs, Strategy strategy, long long max_steps) {
  ConfluenceReport report;
  const std::vector<CriticalPeak> cps = critical_pairs(trs);
  report.checks.reserve(cps.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    JoinCheck check;
    check.cp = static_cast<int>(i);
    check.nf_outer = normalize_counted(trs, cps[i].outer_reduct, strategy, max_steps).normal_form;
    check.nf_inner = normalize_counted(trs, cps[i].inner_reduct, strategy, max_steps).normal_form;
    check.joinable = check.nf_outer == check.nf_inner;
    if (!check.joinable) report.locally_confluent = false;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace trsbound
