#include <doctest.h>

#include "trsbound/errors.hpp"
#include "trsbound/trs_file.hpp"

using namespace trsbound;

namespace {

std::string data_path(const char* name) { return std::string(TRSBOUND_DATA_DIR "/") + name; }

}  // namespace

TEST_CASE("system files: the fixtures parse to the expected shapes") {
  TrsFile group = parse_trs_file(data_path("group10.trs"));
  CHECK(group.trs.signature().size() == 3);
  CHECK(group.trs.n_rules() == 10);
  CHECK(group.var_names == std::vector<std::string>{"x", "y", "z"});
  CHECK(group.trs.signature().at(*group.trs.signature().find("m")).arity == 2);
  CHECK(group.trs.signature().at(*group.trs.signature().find("i")).arity == 1);
  CHECK(group.trs.signature().at(*group.trs.signature().find("e")).arity == 0);

  CHECK(parse_trs_file(data_path("ave.trs")).trs.n_rules() == 5);
  CHECK(parse_trs_file(data_path("minus.trs")).trs.n_rules() == 4);
  CHECK(parse_trs_file(data_path("assoc.trs")).trs.n_rules() == 1);
  CHECK(parse_trs_file(data_path("empty.trs")).trs.n_rules() == 0);
}

TEST_CASE("system files: declared variables map by position") {
  TrsFile f = parse_trs_text("(VAR a b)\n(RULES g(b,a) -> g(a,b))");
  // In the file, b is x2 and a is x1; rule variables are then canonically
  // renumbered by first occurrence in the lhs.
  REQUIRE(f.trs.n_rules() == 1);
  const Rule& r = f.trs.rule(0);
  SymbolId g = *f.trs.signature().find("g");
  CHECK(r.lhs == Term::app(g, {Term::var(1), Term::var(2)}));
  CHECK(r.rhs == Term::app(g, {Term::var(2), Term::var(1)}));
}

TEST_CASE("system files: arrow lexing does not need spaces") {
  TrsFile f = parse_trs_text("(VAR x)(RULES f(x)->x)");
  CHECK(f.trs.n_rules() == 1);
  CHECK(f.trs.rule(0).rhs == Term::var(1));
}

TEST_CASE("system files: error cases") {
  // Inconsistent arity.
  CHECK_THROWS_AS(parse_trs_text("(VAR x) (RULES f(x,x) -> x  f(x) -> x)"), ParseError);
  // Stray text outside sections.
  CHECK_THROWS_AS(parse_trs_text("hello (RULES f -> f)"), ParseError);
  // Unterminated section.
  CHECK_THROWS_AS(parse_trs_text("(RULES f(x) -> x"), ParseError);
  // Duplicate sections.
  CHECK_THROWS_AS(parse_trs_text("(VAR x) (VAR y) (RULES )"), ParseError);
  CHECK_THROWS_AS(parse_trs_text("(RULES ) (RULES )"), ParseError);
  // No RULES at all.
  CHECK_THROWS_AS(parse_trs_text("(VAR x)"), ParseError);
  // Variable applied to arguments.
  CHECK_THROWS_AS(parse_trs_text("(VAR x) (RULES x(x) -> x)"), ParseError);
  // Empty argument list.
  CHECK_THROWS_AS(parse_trs_text("(RULES f() -> a)"), ParseError);
  // Variable declared twice.
  CHECK_THROWS_AS(parse_trs_text("(VAR x x) (RULES f(x) -> x)"), ParseError);
  // Rule violations surface from construction.
  CHECK_THROWS_AS(parse_trs_text("(VAR x) (RULES x -> x)"), RuleError);
  CHECK_THROWS_AS(parse_trs_text("(VAR x y) (RULES f(x) -> y)"), RuleError);
  // Missing file.
  CHECK_THROWS_AS(parse_trs_file(data_path("no_such_file.trs")), ParseError);
}

TEST_CASE("system files: unknown sections are skipped, undeclared names are constants") {
  TrsFile f = parse_trs_text(
      "(COMMENT anything (nested (deeply)) -> stray , tokens)\n"
      "(VAR x)\n"
      "(RULES plus(x,zero) -> x)\n"
      "(STRATEGY INNERMOST)");
  CHECK(f.trs.n_rules() == 1);
  CHECK(f.trs.signature().size() == 2);  // plus and the constant zero
  CHECK(f.trs.signature().at(*f.trs.signature().find("zero")).arity == 0);
}

TEST_CASE("system files: parse-render-parse is the identity") {
  for (const char* name : {"group10.trs", "ave.trs", "minus.trs", "assoc.trs", "empty.trs",
                           "addition.trs", "group3axioms.trs", "group2axioms.trs"}) {
    TrsFile once = parse_trs_file(data_path(name));
    std::string rendered = render_trs(once.trs, once.var_names);
    TrsFile twice = parse_trs_text(rendered);
    CHECK_MESSAGE(once.trs == twice.trs, name);
    // Rendering again gives the same bytes.
    CHECK(render_trs(twice.trs, twice.var_names) == rendered);
  }
}

TEST_CASE("matrix files: whitespace grid with comments") {
  IntMatrix m = parse_matrix_file(data_path("minus_D.txt"));
  REQUIRE(m.rows() == 4);
  REQUIRE(m.cols() == 4);
  CHECK(m(1, 0) == 2);
  CHECK(m(0, 2) == 1);
  CHECK(m(0, 0) == 0);

  IntMatrix neg = parse_matrix_text("1 -2\n# comment line\n-3 4\n");
  CHECK(neg(0, 1) == -2);
  CHECK(neg(1, 0) == -3);

  CHECK_THROWS_AS(parse_matrix_text(""), MatrixError);
  CHECK_THROWS_AS(parse_matrix_text("# only comments\n"), MatrixError);
  CHECK_THROWS_AS(parse_matrix_text("1 2\n3\n"), MatrixError);
  CHECK_THROWS_AS(parse_matrix_text("1 x\n"), MatrixError);
  CHECK_THROWS_AS(parse_matrix_file(data_path("no_such.txt")), MatrixError);
}
