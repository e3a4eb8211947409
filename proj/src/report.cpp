#include "trsbound/report.hpp"

#include <limits>
#include <sstream>

#include "trsbound/errors.hpp"

namespace trsbound {

namespace {

long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    throw MatrixError("matrix entry exceeds 64-bit range in report output");
  }
  return v.convert_to<long long>();
}

ordered_json json_matrix(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_ll(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string divisors_line(const std::vector<Int>& divisors) {
  if (divisors.empty()) return "(none)";
  std::ostringstream out;
  for (size_t i = 0; i < divisors.size(); ++i) {
    if (i) out << ' ';
    out << divisors[i];
  }
  return out.str();
}

std::string rule_string(const Rule& r, const Signature& sig,
                        const std::vector<std::string>& names) {
  return to_string(r.lhs, sig, names) + " -> " + to_string(r.rhs, sig, names);
}

std::vector<std::string> report_notes(const BoundReport& r) {
  std::vector<std::string> notes;
  if (r.lower_bound == 0) {
    notes.push_back(
        "a lower bound of 0 is vacuous: it excludes no presentation of the same theory");
  }
  notes.push_back("termination of the input system is assumed, not checked");
  return notes;
}

}  // namespace

// ---------------------------------------------------------------- analyze --

std::string text_report(const BoundReport& r) {
  std::ostringstream out;
  out << "system: " << r.system_name << '\n';
  out << "rules: " << r.n_rules << "\n";
  out << "symbols: " << r.n_symbols << '\n';
  out << "strategy: " << to_string(r.strategy) << " (step budget " << r.max_steps << ")\n";
  out << "degree: " << r.degree << '\n';
  out << "coefficient ring: " << r.ring.to_string() << '\n';
  out << "critical pairs: " << r.n_cps_total;
  if (r.prime_only) {
    out << " (" << r.n_cps_used << " prime pairs used)";
  } else {
    out << " (all " << r.n_cps_used << " used)";
  }
  out << '\n';
  out << "completeness: all " << r.completeness.cps_checked
      << " critical pairs join under the strategy; local confluence verified\n";
  out << "D(R): " << r.D.rows() << " x " << r.D.cols() << " rule-usage matrix\n";
  out << "smith divisors of D: " << divisors_line(r.snf_D.divisors) << '\n';
  if (r.rank_D_mod_p) {
    out << "rank of D over " << r.ring.to_string() << ": " << *r.rank_D_mod_p << '\n';
  }
  if (r.snf_verified) {
    out << "smith form verified: U*D*V equals the diagonal form, |det U| = |det V| = 1\n";
  }
  out << "e(R): " << r.e << '\n';
  out << "lower bound: " << r.lower_bound
      << "  (every equivalent complete system has at least this many rules)\n";
  out << "rank of the symbol-count boundary: " << r.rank_d1 << '\n';
  out << "s(H2): " << r.s_h2 << '\n';
  out << "s(H1): " << r.s_h1 << '\n';
  for (const std::string& n : report_notes(r)) out << "note: " << n << '\n';
  return out.str();
}

ordered_json json_report(const BoundReport& r) {
  ordered_json j;
  j["command"] = "analyze";
  j["system"] = r.system_name;
  j["n_rules"] = r.n_rules;
  j["n_symbols"] = r.n_symbols;
  j["strategy"] = to_string(r.strategy);
  j["max_steps"] = r.max_steps;
  j["degree"] = r.degree;
  j["ring"] = r.ring.to_string();
  j["critical_pairs"] = {
      {"total", r.n_cps_total}, {"used", r.n_cps_used}, {"prime_only", r.prime_only}};
  j["completeness"] = {{"pairs_checked", r.completeness.cps_checked},
                       {"all_joinable", r.completeness.all_joinable},
                       {"termination", "assumed"}};
  j["matrix"] = json_matrix(r.D);
  ordered_json divisors = ordered_json::array();
  for (const Int& d : r.snf_D.divisors) divisors.push_back(to_ll(d));
  j["smith_divisors"] = std::move(divisors);
  if (r.rank_D_mod_p) {
    j["rank_mod_p"] = *r.rank_D_mod_p;
  } else {
    j["rank_mod_p"] = nullptr;
  }
  j["e"] = r.e;
  j["lower_bound"] = r.lower_bound;
  j["rank_d1"] = r.rank_d1;
  j["s_h2"] = r.s_h2;
  j["s_h1"] = r.s_h1;
  j["snf_verified"] = r.snf_verified;
  ordered_json notes = ordered_json::array();
  for (const std::string& n : report_notes(r)) notes.push_back(n);
  j["notes"] = std::move(notes);
  return j;
}

// -------------------------------------------------------------------- cps --

std::string text_cps(const Trs& trs, const std::vector<CriticalPeak>& cps,
                     const std::vector<std::string>& var_names) {
  const Signature& sig = trs.signature();
  std::ostringstream out;
  out << "critical pairs: " << cps.size() << '\n';
  int i = 0;
  for (const CriticalPeak& cp : cps) {
    ++i;
    out << "#" << i << "  outer rule " << (cp.outer + 1) << ", inner rule " << (cp.inner + 1)
        << " at " << position_to_string(cp.pos);
    if (is_prime(trs, cp)) out << "  [prime]";
    out << '\n';
    out << "    peak : " << to_string(cp.peak, sig, var_names) << '\n';
    out << "    outer: " << to_string(cp.outer_reduct, sig, var_names) << '\n';
    out << "    inner: " << to_string(cp.inner_reduct, sig, var_names) << '\n';
  }
  return out.str();
}

ordered_json json_cps(const Trs& trs, const std::vector<CriticalPeak>& cps,
                      const std::vector<std::string>& var_names) {
  const Signature& sig = trs.signature();
  ordered_json j;
  j["command"] = "cps";
  j["count"] = cps.size();
  ordered_json pairs = ordered_json::array();
  for (const CriticalPeak& cp : cps) {
    ordered_json p;
    p["outer_rule"] = cp.outer + 1;
    p["inner_rule"] = cp.inner + 1;
    p["position"] = position_to_string(cp.pos);
    p["prime"] = is_prime(trs, cp);
    p["peak"] = to_string(cp.peak, sig, var_names);
    p["outer_reduct"] = to_string(cp.outer_reduct, sig, var_names);
    p["inner_reduct"] = to_string(cp.inner_reduct, sig, var_names);
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

// -------------------------------------------------------------------- snf --

std::string text_snf(const IntMatrix& input, const SnfResult& snf, bool verified) {
  std::ostringstream out;
  out << "input: " << input.rows() << " x " << input.cols() << '\n';
  out << "rank: " << snf.rank << '\n';
  out << "divisors: " << divisors_line(snf.divisors) << '\n';
  if (verified) {
    out << "verified: U*A*V equals the diagonal form, |det U| = |det V| = 1\n";
  }
  return out.str();
}

ordered_json json_snf(const IntMatrix& input, const SnfResult& snf, bool verified) {
  ordered_json j;
  j["command"] = "snf";
  j["rows"] = input.rows();
  j["cols"] = input.cols();
  j["rank"] = snf.rank;
  ordered_json divisors = ordered_json::array();
  for (const Int& d : snf.divisors) divisors.push_back(to_ll(d));
  j["divisors"] = std::move(divisors);
  j["verified"] = verified;
  if (snf.left) j["left"] = json_matrix(*snf.left);
  if (snf.right) j["right"] = json_matrix(*snf.right);
  return j;
}

// ------------------------------------------------------------------ equiv --

std::string text_equiv(const EquivReport& r, const Trs& base, const Trs& candidate,
                       const std::vector<std::string>& var_names) {
  const Signature sig = signature_union(base.signature(), candidate.signature());
  std::ostringstream out;
  out << "verdict: " << to_string(r.verdict) << '\n';
  out << "candidate rules under the base system:\n";
  if (r.candidate_checks.empty()) out << "  (none)\n";
  for (const CandidateRuleCheck& c : r.candidate_checks) {
    const Rule& rule = candidate.rules()[c.rule];
    out << "  rule " << (c.rule + 1) << " (" << rule_string(rule, sig, var_names) << "): ";
    if (c.budget_exhausted) {
      out << "step budget exhausted\n";
    } else if (c.holds) {
      out << "joins (normal form " << to_string(c.nf_lhs, sig, var_names) << ")\n";
    } else {
      out << "does not join (" << to_string(c.nf_lhs, sig, var_names) << " vs "
          << to_string(c.nf_rhs, sig, var_names) << ")\n";
    }
  }
  out << "base rules under the candidate system:\n";
  if (r.base_checks.empty()) out << "  (none)\n";
  for (const BaseRuleCheck& b : r.base_checks) {
    const Rule& rule = base.rules()[b.rule];
    out << "  rule " << (b.rule + 1) << " (" << rule_string(rule, sig, var_names)
        << "): " << to_string(b.status) << '\n';
  }
  if (!r.detail.empty()) out << "detail: " << r.detail << '\n';
  return out.str();
}

ordered_json json_equiv(const EquivReport& r, const Trs& base, const Trs& candidate,
                        const std::vector<std::string>& var_names) {
  const Signature sig = signature_union(base.signature(), candidate.signature());
  ordered_json j;
  j["command"] = "equiv";
  j["verdict"] = to_string(r.verdict);
  ordered_json cands = ordered_json::array();
  for (const CandidateRuleCheck& c : r.candidate_checks) {
    ordered_json x;
    x["rule"] = c.rule + 1;
    x["text"] = rule_string(candidate.rules()[c.rule], sig, var_names);
    x["holds"] = c.holds;
    x["budget_exhausted"] = c.budget_exhausted;
    if (!c.budget_exhausted) {
      x["nf_lhs"] = to_string(c.nf_lhs, sig, var_names);
      x["nf_rhs"] = to_string(c.nf_rhs, sig, var_names);
    }
    cands.push_back(std::move(x));
  }
  j["candidate_checks"] = std::move(cands);
  ordered_json bases = ordered_json::array();
  for (const BaseRuleCheck& b : r.base_checks) {
    ordered_json x;
    x["rule"] = b.rule + 1;
    x["text"] = rule_string(base.rules()[b.rule], sig, var_names);
    x["status"] = to_string(b.status);
    bases.push_back(std::move(x));
  }
  j["base_checks"] = std::move(bases);
  j["detail"] = r.detail;
  return j;
}

// ----------------------------------------------------------------- tietze --

std::string text_tietze(const TietzeRunResult& r) {
  std::ostringstream out;
  out << "applied " << r.step_summaries.size() << " step(s)\n";
  for (const std::string& s : r.step_summaries) out << "  " << s << '\n';
  out << "resulting system (" << r.final_trs.n_rules() << " rules, "
      << r.final_trs.signature().size() << " symbols):\n";
  out << render_trs(r.final_trs, r.final_var_names);
  return out.str();
}

ordered_json json_tietze(const TietzeRunResult& r) {
  ordered_json j;
  j["command"] = "tietze";
  ordered_json steps = ordered_json::array();
  for (const std::string& s : r.step_summaries) steps.push_back(s);
  j["steps"] = std::move(steps);
  j["n_rules"] = r.final_trs.n_rules();
  j["n_symbols"] = static_cast<int>(r.final_trs.signature().size());
  ordered_json symbols = ordered_json::array();
  for (const Symbol& s : r.final_trs.signature().symbols()) {
    symbols.push_back({{"name", s.name}, {"arity", s.arity}});
  }
  j["symbols"] = std::move(symbols);
  ordered_json rules = ordered_json::array();
  for (const Rule& rule : r.final_trs.rules()) {
    rules.push_back(rule_string(rule, r.final_trs.signature(), r.final_var_names));
  }
  j["rules"] = std::move(rules);
  return j;
}

}  // namespace trsbound
