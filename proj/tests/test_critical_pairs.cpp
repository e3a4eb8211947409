#include <doctest.h>

#include <algorithm>

#include "support/oracles.hpp"
#include "trsbound/critical_pairs.hpp"
#include "trsbound/errors.hpp"
#include "trsbound/trs_file.hpp"

using namespace trsbound;

namespace {

std::string data_path(const char* name) { return std::string(TRSBOUND_DATA_DIR "/") + name; }

Trs load(const char* name) { return parse_trs_file(data_path(name)).trs; }

}  // namespace

TEST_CASE("critical pairs: anchored counts") {
  CHECK(critical_pairs(load("ave.trs")).size() == 1);
  CHECK(critical_pairs(load("minus.trs")).size() == 4);
  CHECK(critical_pairs(load("group10.trs")).size() == 48);
  CHECK(critical_pairs(load("assoc.trs")).size() == 1);
  CHECK(critical_pairs(load("empty.trs")).empty());
}

TEST_CASE("critical pairs: the single overlap of the averaging system") {
  Trs ave = load("ave.trs");
  std::vector<CriticalPeak> cps = critical_pairs(ave);
  REQUIRE(cps.size() == 1);
  const CriticalPeak& cp = cps[0];
  // The shift rule (index 1) overlaps the deep-successor rule (index 4) at
  // the root; the lower index plays the outer role.
  CHECK(cp.outer == 1);
  CHECK(cp.inner == 4);
  CHECK(cp.pos == Position{});
  // peak = ave(s(s(s(x))), s(y)), renumbered left to right.
  CHECK(cp.peak == parse_term("ave(s(s(s(x1))),s(x2))", ave.signature(), {"x1", "x2"}));
  CHECK(cp.outer_reduct ==
        apply_subst(ave.rule(1).rhs,
                    *match_term(ave.rule(1).lhs, cp.peak)));
  CHECK(subterm_at(cp.peak, cp.pos).has_value());
  // Both reducts rewrite the peak (one step each, at the stated positions).
  auto one_step = trsbound::testing::all_rewrites(ave, cp.peak);
  CHECK(std::find(one_step.begin(), one_step.end(), cp.outer_reduct) != one_step.end());
  CHECK(std::find(one_step.begin(), one_step.end(), cp.inner_reduct) != one_step.end());
}

TEST_CASE("critical pairs: convention edge cases") {
  Signature sig;
  SymbolId f = sig.add("f", 1);
  SymbolId a = sig.add("a", 0);
  SymbolId b = sig.add("b", 0);
  Term fx = Term::app(f, {Term::var(1)});

  // A rule never overlaps itself at the root.
  Trs self(sig, {Rule{fx, Term::var(1)}});
  CHECK(critical_pairs(self).empty());

  // Two distinct rules with unifiable left sides at the root: one pair,
  // lower index outer.
  Trs twin(sig, {Rule{fx, Term::app(a, {})}, Rule{fx, Term::app(b, {})}});
  std::vector<CriticalPeak> tw = critical_pairs(twin);
  REQUIRE(tw.size() == 1);
  CHECK(tw[0].outer == 0);
  CHECK(tw[0].inner == 1);
  CHECK(tw[0].pos.empty());
  CHECK(tw[0].outer_reduct == Term::app(a, {}));
  CHECK(tw[0].inner_reduct == Term::app(b, {}));

  // Self-overlap at a proper position is kept: f(f(x)) -> x overlaps itself.
  Term ffx = Term::app(f, {fx});
  Trs nest(sig, {Rule{ffx, Term::var(1)}});
  std::vector<CriticalPeak> ns = critical_pairs(nest);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0].outer == 0);
  CHECK(ns[0].inner == 0);
  CHECK(ns[0].pos == Position{1});

  // Variable positions never overlap: g(x) -> x and a -> b do not interact
  // through x.
  Signature sig2;
  SymbolId g = sig2.add("g", 1);
  SymbolId a2 = sig2.add("a", 0);
  SymbolId b2 = sig2.add("b", 0);
  Trs novar(sig2, {Rule{Term::app(g, {Term::var(1)}), Term::var(1)},
                   Rule{Term::app(a2, {}), Term::app(b2, {})}});
  CHECK(critical_pairs(novar).empty());
}

TEST_CASE("critical pairs: deterministic order and variable renumbering") {
  Trs group = load("group10.trs");
  std::vector<CriticalPeak> cps = critical_pairs(group);
  REQUIRE(cps.size() == 48);
  // Lexicographic by (outer, inner, pos).
  for (size_t i = 1; i < cps.size(); ++i) {
    auto key = [](const CriticalPeak& c) { return std::make_tuple(c.outer, c.inner, c.pos); };
    CHECK(key(cps[i - 1]) < key(cps[i]));
  }
  // Peaks are canonically numbered: first seen variable is x1.
  for (const CriticalPeak& cp : cps) {
    int seen = 0;
    for (const Position& p : positions(cp.peak)) {
      Term sub = *subterm_at(cp.peak, p);
      if (sub.is_var()) {
        if (sub.var_index() > seen) {
          CHECK(sub.var_index() == seen + 1);
          seen = sub.var_index();
        }
      }
    }
    // The two reducts really are one-step rewrites of the peak.
    CHECK(apply_subst(group.rule(cp.outer).rhs,
                      *match_term(group.rule(cp.outer).lhs, cp.peak)) == cp.outer_reduct);
    Term redex = *subterm_at(cp.peak, cp.pos);
    CHECK(apply_subst(group.rule(cp.inner).rhs,
                      *match_term(group.rule(cp.inner).lhs, redex)) ==
          *subterm_at(cp.inner_reduct, cp.pos));
  }
}

TEST_CASE("critical pairs: primality matches the brute-force definition") {
  for (const char* file : {"ave.trs", "minus.trs", "group10.trs", "assoc.trs"}) {
    Trs trs = load(file);
    for (const CriticalPeak& cp : critical_pairs(trs)) {
      Term redex = *subterm_at(cp.peak, cp.pos);
      bool oracle = true;
      for (const Position& p : positions(redex)) {
        if (p.empty()) continue;
        if (!trsbound::testing::all_rewrites(trs, *subterm_at(redex, p)).empty()) {
          // A proper subterm of the redex is reducible.
          oracle = false;
          break;
        }
      }
      CHECK(is_prime(trs, cp) == oracle);
    }
  }
  // The averaging system's one pair is prime, so the filter keeps it.
  Trs ave = load("ave.trs");
  CHECK(cp_filter_prime(ave, critical_pairs(ave)).size() == 1);
}

TEST_CASE("local confluence: fixtures join, broken systems do not") {
  for (const char* file :
       {"ave.trs", "minus.trs", "group10.trs", "assoc.trs", "addition.trs", "group2axioms.trs"}) {
    ConfluenceReport rep =
        local_confluence_check(load(file), Strategy::LeftmostInnermost, 100000);
    CHECK_MESSAGE(rep.locally_confluent, file);
    for (const JoinCheck& c : rep.checks) {
      CHECK(c.joinable);
      CHECK(c.nf_outer == c.nf_inner);
    }
  }

  // The bare three group axioms are the classic non-confluent presentation:
  // the peak of associativity over the left inverse does not join.
  ConfluenceReport axioms =
      local_confluence_check(load("group3axioms.trs"), Strategy::LeftmostInnermost, 100000);
  CHECK(!axioms.locally_confluent);

  Signature sig;
  SymbolId f = sig.add("f", 1);
  SymbolId a = sig.add("a", 0);
  SymbolId b = sig.add("b", 0);
  Term fx = Term::app(f, {Term::var(1)});
  Trs broken(sig, {Rule{fx, Term::app(a, {})}, Rule{fx, Term::app(b, {})}});
  ConfluenceReport rep = local_confluence_check(broken, Strategy::LeftmostInnermost, 100);
  CHECK(!rep.locally_confluent);
  REQUIRE(rep.checks.size() == 1);
  CHECK(!rep.checks[0].joinable);
}

TEST_CASE("critical pairs: every pair of the random complete corpus joins") {
  std::vector<Trs> corpus = trsbound::testing::random_complete_corpus(99, 20);
  REQUIRE(corpus.size() >= 20);
  for (const Trs& trs : corpus) {
    for (Strategy s : {Strategy::LeftmostInnermost, Strategy::LeftmostOutermost}) {
      ConfluenceReport rep = local_confluence_check(trs, s, 100000);
      CHECK(rep.locally_confluent);
    }
  }
}
