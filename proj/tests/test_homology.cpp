#include <doctest.h>

#include <algorithm>
#include <set>

#include "support/oracles.hpp"
#include "trsbound/errors.hpp"
#include "trsbound/homology.hpp"
#include "trsbound/trs_file.hpp"

using namespace trsbound;

namespace {

std::string data_path(const char* name) { return std::string(TRSBOUND_DATA_DIR "/") + name; }

Trs load(const char* name) { return parse_trs_file(data_path(name)).trs; }

/// Columns as sign-normalized vectors (first nonzero entry positive), for
/// comparison up to column permutation and per-column sign.
std::multiset<std::vector<Int>> column_shape(const IntMatrix& m) {
  std::multiset<std::vector<Int>> cols;
  for (int j = 0; j < m.cols(); ++j) {
    std::vector<Int> col(m.rows());
    int first_nonzero = -1;
    for (int i = 0; i < m.rows(); ++i) {
      col[i] = m(i, j);
      if (first_nonzero < 0 && col[i] != 0) first_nonzero = i;
    }
    if (first_nonzero >= 0 && col[first_nonzero] < 0) {
      for (Int& v : col) v = -v;
    }
    cols.insert(std::move(col));
  }
  return cols;
}

}  // namespace

TEST_CASE("boundary maps: arity row and symbol-count columns") {
  Signature sig;
  sig.add("0", 0);
  sig.add("s", 1);
  sig.add("ave", 2);
  IntMatrix d0 = build_d0(sig);
  REQUIRE(d0.rows() == 1);
  REQUIRE(d0.cols() == 3);
  CHECK(d0(0, 0) == -1);
  CHECK(d0(0, 1) == 0);
  CHECK(d0(0, 2) == 1);

  Trs minus = load("minus.trs");
  IntMatrix d1 = build_d1(minus);
  REQUIRE(d1.rows() == 4);  // symbols -, f, +, *
  REQUIRE(d1.cols() == 4);  // four rules
  // Column j is symbol_counts(rhs_j) - symbol_counts(lhs_j).
  std::vector<std::vector<long long>> expected = {
      {-2, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, -1, 1}, {1, 0, 1, -1}};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) CHECK(d1(i, j) == expected[j][i]);
}

TEST_CASE("boundary maps: the chain identity holds over the selected ring") {
  std::vector<Trs> systems = {load("ave.trs"), load("minus.trs"), load("assoc.trs"),
                              load("group10.trs"), load("addition.trs")};
  std::vector<Trs> corpus = trsbound::testing::random_complete_corpus(99, 20);
  systems.insert(systems.end(), corpus.begin(), corpus.end());
  for (const Trs& trs : systems) {
    long long d = degree(trs);
    IntMatrix comp = build_d0(trs.signature()) * build_d1(trs);
    for (int j = 0; j < comp.cols(); ++j) {
      if (d == 0) {
        CHECK(comp(0, j) == 0);
      } else {
        CHECK(comp(0, j) % d == 0);
      }
    }
  }
}

TEST_CASE("analyze: averaging system (exact anchored values)") {
  BoundReport r = analyze(load("ave.trs"));
  CHECK(r.n_rules == 5);
  CHECK(r.n_symbols == 3);
  CHECK(r.degree == 0);
  CHECK(r.ring == Ring::integers());
  CHECK(r.n_cps_total == 1);
  CHECK(r.n_cps_used == 1);
  // D is the 5x1 zero matrix: both sides of the single overlap normalize
  // with identical rule usage.
  REQUIRE(r.D.rows() == 5);
  REQUIRE(r.D.cols() == 1);
  CHECK(r.D.is_zero());
  CHECK(r.snf_D.divisors.empty());
  CHECK(r.e == 0);
  CHECK(r.lower_bound == 5);
  CHECK(r.rank_d1 == 2);
  CHECK(r.s_h2 == 3);
  CHECK(r.completeness.all_joinable);
}

TEST_CASE("analyze: negation system (matrix up to column permutation/sign)") {
  BoundReport r = analyze(load("minus.trs"));
  CHECK(r.degree == 0);
  CHECK(r.n_cps_total == 4);
  REQUIRE(r.D.rows() == 4);
  REQUIRE(r.D.cols() == 4);

  IntMatrix expected(4, 4);
  std::vector<std::vector<long long>> rows = {
      {0, 0, 1, 1}, {2, 0, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) expected(i, j) = rows[i][j];
  CHECK(column_shape(r.D) == column_shape(expected));

  CHECK(r.snf_D.divisors == std::vector<Int>{1, 2});
  CHECK(r.e == 1);
  CHECK(r.lower_bound == 3);
  CHECK(r.s_h2 == 1);
  CHECK(r.rank_d1 == 2);  // consistency: 4 - 1 - 2 = 1
}

TEST_CASE("analyze: associativity alone (vacuous bound)") {
  BoundReport r = analyze(load("assoc.trs"));
  CHECK(r.n_cps_total == 1);
  REQUIRE(r.D.rows() == 1);
  REQUIRE(r.D.cols() == 1);
  CHECK((r.D(0, 0) == 1 || r.D(0, 0) == -1));
  CHECK(r.e == 1);
  CHECK(r.lower_bound == 0);
  CHECK(r.s_h2 == 0);
}

TEST_CASE("analyze: group system (rank over GF(2))") {
  BoundReport r = analyze(load("group10.trs"));
  CHECK(r.n_rules == 10);
  CHECK(r.n_symbols == 3);
  CHECK(r.degree == 2);
  CHECK(r.ring == Ring::prime_field(2));
  CHECK(r.n_cps_total == 48);
  REQUIRE(r.rank_D_mod_p.has_value());
  CHECK(*r.rank_D_mod_p == 8);
  CHECK(r.e == 8);
  CHECK(r.lower_bound == 2);
  CHECK(r.rank_d1 == 2);
  CHECK(r.s_h2 == 0);
  CHECK(r.s_h1 == 0);
}

TEST_CASE("analyze: empty system") {
  BoundReport r = analyze(load("empty.trs"));
  CHECK(r.n_rules == 0);
  CHECK(r.degree == 0);
  CHECK(r.n_cps_total == 0);
  CHECK(r.e == 0);
  CHECK(r.lower_bound == 0);
  CHECK(r.s_h2 == 0);
}

TEST_CASE("analyze: first-homology sizes") {
  // With no rules, the kernel of the arity row over {0,s,ave} is free of
  // rank 2 and nothing is quotiented out.
  Signature sig;
  sig.add("0", 0);
  sig.add("s", 1);
  sig.add("ave", 2);
  Trs none(sig, {});
  CHECK(s_h1_of(none, Ring::integers()) == 2);

  // Adding rules can only shrink the quotient.
  CHECK(s_h1_of(load("ave.trs"), Ring::integers()) <= 2);
  CHECK(s_h1_of(load("group10.trs"), Ring::prime_field(2)) == 0);
  CHECK(rank_d1_of(load("ave.trs"), Ring::integers()) == 2);
}

TEST_CASE("analyze: minimal generator counts of abelian groups") {
  CHECK(s_of_group(0, {}) == 0);
  CHECK(s_of_group(3, {}) == 3);
  CHECK(s_of_group(0, {Int(2), Int(4)}) == 2);
  CHECK(s_of_group(2, {Int(6)}) == 3);
}

TEST_CASE("analyze: composite degree is rejected with its factorization") {
  // g(x,x,x,x,x) -> x has degree |5 - 1| = 4 = 2 * 2.
  Signature sig;
  SymbolId g = sig.add("g", 5);
  Term lhs = Term::app(
      g, {Term::var(1), Term::var(1), Term::var(1), Term::var(1), Term::var(1)});
  Trs four(sig, {Rule{lhs, Term::var(1)}});
  CHECK(degree(four) == 4);
  try {
    analyze(four);
    FAIL("composite degree must be rejected");
  } catch (const CompositeDegreeError& e) {
    CHECK(e.degree == 4);
    CHECK(e.factors == std::vector<long long>{2, 2});
  }
}

TEST_CASE("analyze: non-joinable critical pairs are rejected") {
  // Both rules preserve variable counts, so the degree is 0 and the ring
  // gate passes; the root overlap g(x) vs h(x) then fails to join.
  Signature sig;
  SymbolId f = sig.add("f", 1);
  SymbolId g = sig.add("g", 1);
  SymbolId h = sig.add("h", 1);
  Term fx = Term::app(f, {Term::var(1)});
  Trs broken(sig, {Rule{fx, Term::app(g, {Term::var(1)})}, Rule{fx, Term::app(h, {Term::var(1)})}});
  CHECK(degree(broken) == 0);
  CHECK_THROWS_AS(analyze(broken), NotCompleteError);
}

TEST_CASE("analyze: identity bound = s_h2 + rank_d1 on the whole corpus") {
  std::vector<Trs> systems = {load("ave.trs"), load("minus.trs"), load("assoc.trs"),
                              load("group10.trs")};
  std::vector<Trs> corpus = trsbound::testing::random_complete_corpus(99, 20);
  REQUIRE(corpus.size() >= 20);
  systems.insert(systems.end(), corpus.begin(), corpus.end());
  for (const Trs& trs : systems) {
    BoundReport r = analyze(trs);
    CHECK(r.lower_bound == r.s_h2 + r.rank_d1);
    CHECK(r.s_h2 >= 0);
    CHECK(r.lower_bound >= 0);
    CHECK(r.lower_bound <= r.n_rules);
  }
}

TEST_CASE("analyze: strategy invariance of e, bound, s_h2") {
  std::vector<Trs> systems = {load("ave.trs"), load("minus.trs"), load("assoc.trs"),
                              load("group10.trs")};
  std::vector<Trs> corpus = trsbound::testing::random_complete_corpus(99, 20);
  systems.insert(systems.end(), corpus.begin(), corpus.end());
  for (const Trs& trs : systems) {
    AnalyzeOptions li, lo;
    li.strategy = Strategy::LeftmostInnermost;
    lo.strategy = Strategy::LeftmostOutermost;
    BoundReport a = analyze(trs, li);
    BoundReport b = analyze(trs, lo);
    CHECK(a.e == b.e);
    CHECK(a.lower_bound == b.lower_bound);
    CHECK(a.s_h2 == b.s_h2);
    CHECK(a.s_h1 == b.s_h1);
  }
}

TEST_CASE("analyze: prime-pair restriction preserves e and the bound") {
  std::vector<Trs> systems = {load("ave.trs"), load("minus.trs"), load("assoc.trs"),
                              load("group10.trs")};
  std::vector<Trs> corpus = trsbound::testing::random_complete_corpus(99, 20);
  systems.insert(systems.end(), corpus.begin(), corpus.end());
  for (const Trs& trs : systems) {
    AnalyzeOptions all, prime;
    prime.prime_only = true;
    BoundReport a = analyze(trs, all);
    BoundReport b = analyze(trs, prime);
    CHECK(b.n_cps_used <= a.n_cps_used);
    CHECK(a.e == b.e);
    CHECK(a.lower_bound == b.lower_bound);
    CHECK(a.s_h2 == b.s_h2);
  }
}

TEST_CASE("analyze: Smith-form verification path") {
  AnalyzeOptions opts;
  opts.verify_snf = true;
  BoundReport r = analyze(load("minus.trs"), opts);
  CHECK(r.snf_verified);
  CHECK(r.lower_bound == 3);
}

TEST_CASE("build_D: rejects systems whose pairs do not join") {
  Signature sig;
  SymbolId f = sig.add("f", 1);
  SymbolId a = sig.add("a", 0);
  SymbolId b = sig.add("b", 0);
  Term fx = Term::app(f, {Term::var(1)});
  Trs broken(sig, {Rule{fx, Term::app(a, {})}, Rule{fx, Term::app(b, {})}});
  CHECK_THROWS_AS(
      build_D(broken, critical_pairs(broken), Strategy::LeftmostInnermost, 1000),
      NotCompleteError);
}
