#include <doctest.h>

#include "trsbound/errors.hpp"
#include "trsbound/tietze.hpp"
#include "trsbound/trs_file.hpp"

using namespace trsbound;

namespace {

std::string data_path(const char* name) { return std::string(TRSBOUND_DATA_DIR "/") + name; }

TrsFile load_file(const char* name) { return parse_trs_file(data_path(name)); }

TietzeStep add_symbol(std::string name, int arity, Term def) {
  TietzeStep s;
  s.kind = TietzeKind::AddSymbol;
  s.symbol_name = std::move(name);
  s.arity = arity;
  s.definition = std::move(def);
  return s;
}

TietzeStep remove_symbol(std::string name) {
  TietzeStep s;
  s.kind = TietzeKind::RemoveSymbol;
  s.symbol_name = std::move(name);
  return s;
}

TietzeStep add_rule(Term lhs, Term rhs) {
  TietzeStep s;
  s.kind = TietzeKind::AddRule;
  s.lhs = std::move(lhs);
  s.rhs = std::move(rhs);
  return s;
}

TietzeStep remove_rule(Term lhs, Term rhs) {
  TietzeStep s;
  s.kind = TietzeKind::RemoveRule;
  s.lhs = std::move(lhs);
  s.rhs = std::move(rhs);
  return s;
}

}  // namespace

TEST_CASE("tietze: the worked five-step replacement of the successor symbol") {
  TrsFile add = load_file("addition.trs");
  Trs trs = add.trs;
  const std::vector<std::string> names = {"x", "y", "z"};
  TietzeOptions opts;

  // (1) introduce 1 with defining rule S(0) -> 1
  Term s0 = parse_term("S(0)", trs.signature(), names);
  trs = tietze_apply(trs, add_symbol("1", 0, s0), opts, 1);
  CHECK(trs.signature().size() == 4);
  CHECK(trs.n_rules() == 5);

  // (3) add 1 + x -> S(x), derivable: 1+x <- S(0)+x -> S(0+x) -> S(x)
  Term lhs = parse_term("+(1,x)", trs.signature(), names);
  Term rhs = parse_term("S(x)", trs.signature(), names);
  trs = tietze_apply(trs, add_rule(lhs, rhs), opts, 2);
  CHECK(trs.n_rules() == 6);

  // (4) remove S(0) -> 1, derivable via 1+0
  Term one = parse_term("1", trs.signature(), names);
  trs = tietze_apply(trs, remove_rule(s0, one), opts, 3);
  CHECK(trs.n_rules() == 5);

  // (4) remove S(x)+y -> S(x+y), derivable via (1+x)+y
  Term sl = parse_term("+(S(x),y)", trs.signature(), names);
  Term sr = parse_term("S(+(x,y))", trs.signature(), names);
  trs = tietze_apply(trs, remove_rule(sl, sr), opts, 4);
  CHECK(trs.n_rules() == 4);

  // (2) remove S together with its defining rule +(1,x) -> S(x)
  trs = tietze_apply(trs, remove_symbol("S"), opts, 5);
  CHECK(trs.signature().size() == 3);
  CHECK(trs.signature().find("S") == std::nullopt);
  CHECK(trs.signature().find("1").has_value());
  REQUIRE(trs.n_rules() == 3);

  // The survivors are exactly the three +/0 rules of the original system.
  Trs expected = parse_trs_text("(VAR x y z)\n(RULES\n"
                                "  +(0,x) -> x\n"
                                "  +(x,0) -> x\n"
                                "  +(+(x,y),z) -> +(x,+(y,z))\n)")
                     .trs;
  REQUIRE(expected.n_rules() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(trs.rule(i) == expected.rule(i));
  }
}

TEST_CASE("tietze: the same five steps run from a script file") {
  TietzeOptions opts;
  TietzeRunResult r = run_tietze_script(data_path("addition_tietze.txt"), opts);
  CHECK(r.initial.n_rules() == 4);
  CHECK(r.step_summaries.size() == 5);
  CHECK(r.final_trs.n_rules() == 3);
  CHECK(r.final_trs.signature().size() == 3);
  CHECK(r.final_trs.signature().find("S") == std::nullopt);
}

TEST_CASE("tietze: add-symbol side conditions") {
  Trs trs = load_file("addition.trs").trs;
  const std::vector<std::string> names = {"x", "y"};
  TietzeOptions opts;

  // Duplicate name.
  Term s0 = parse_term("S(0)", trs.signature(), names);
  CHECK_THROWS_AS(tietze_apply(trs, add_symbol("S", 1, s0), opts), TietzeError);
  // The defining term may only use x1..xn.
  Term xy = parse_term("+(x,y)", trs.signature(), names);
  CHECK_THROWS_AS(tietze_apply(trs, add_symbol("pair", 1, xy), opts), TietzeError);
  CHECK_NOTHROW(tietze_apply(trs, add_symbol("pair", 2, xy), opts));
  // A variable definition is not a rule lhs.
  CHECK_THROWS_AS(tietze_apply(trs, add_symbol("id", 1, Term::var(1)), opts), TietzeError);
  // Negative arity is nonsense.
  CHECK_THROWS_AS(tietze_apply(trs, add_symbol("bad", -1, s0), opts), TietzeError);
}

TEST_CASE("tietze: remove-symbol requires a lone defining rule") {
  Trs trs = load_file("addition.trs").trs;
  TietzeOptions opts;
  // S occurs in ordinary rules: not removable.
  CHECK_THROWS_AS(tietze_apply(trs, remove_symbol("S"), opts), TietzeError);
  CHECK_THROWS_AS(tietze_apply(trs, remove_symbol("+"), opts), TietzeError);
  // Unknown symbol.
  CHECK_THROWS_AS(tietze_apply(trs, remove_symbol("Q"), opts), TietzeError);
}

TEST_CASE("tietze: add-rule verifies derivability and rejects the rest") {
  Trs assoc = load_file("assoc.trs").trs;
  const std::vector<std::string> names = {"x", "y", "z", "w"};
  TietzeOptions opts;

  // Commutativity does not follow from associativity; the saturation
  // reaches a fixpoint and refutes it.
  Term fxy = parse_term("f(x,y)", assoc.signature(), names);
  Term fyx = parse_term("f(y,x)", assoc.signature(), names);
  CHECK_THROWS_AS(tietze_apply(assoc, add_rule(fxy, fyx), opts), TietzeError);

  // The four-way reassociation follows.
  Term l = parse_term("f(f(f(x,y),z),w)", assoc.signature(), names);
  Term r = parse_term("f(x,f(y,f(z,w)))", assoc.signature(), names);
  Trs bigger = tietze_apply(assoc, add_rule(l, r), opts);
  CHECK(bigger.n_rules() == 2);

  // Removing the added rule is fine (it is derivable without itself);
  // removing the generator is not derivable from the derived rule alone.
  Trs back = tietze_apply(bigger, remove_rule(l, r), opts);
  CHECK(back.n_rules() == 1);
  CHECK_THROWS_AS(tietze_apply(bigger, remove_rule(assoc.rule(0).lhs, assoc.rule(0).rhs), opts),
                  TietzeError);

  // Removing a rule that is not present at all.
  CHECK_THROWS_AS(tietze_apply(assoc, remove_rule(fxy, fyx), opts), TietzeError);
}
