#include "trsbound/trs_file.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "trsbound/errors.hpp"

namespace trsbound {

namespace {

// ---------------------------------------------------------------- tokens --

enum class Tok { LParen, RParen, Comma, Arrow, Ident, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '*' ||
         c == '\'' || c == '-';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Tok::LParen, "(", line});
      ++i;
      continue;
    }
    if (c == ')') {
      out.push_back({Tok::RParen, ")", line});
      ++i;
      continue;
    }
    if (c == ',') {
      out.push_back({Tok::Comma, ",", line});
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", line});
      i += 2;
      continue;
    }
    if (is_ident_char(c)) {
      size_t j = i;
      std::string name;
      while (j < text.size() && is_ident_char(text[j])) {
        // "->" ends the identifier: "x->y" is three tokens.
        if (text[j] == '-' && j + 1 < text.size() && text[j + 1] == '>') break;
        name.push_back(text[j]);
        ++j;
      }
      if (name.empty()) {
        // A lone '-' directly before '>' was consumed above; reaching here
        // means '-' at end of input or similar.
        throw ParseError("line " + std::to_string(line) + ": unexpected character '-'");
      }
      out.push_back({Tok::Ident, std::move(name), line});
      i = j;
      continue;
    }
    throw ParseError("line " + std::to_string(line) + ": unexpected character '" +
                     std::string(1, c) + "'");
  }
  out.push_back({Tok::End, "", line});
  return out;
}

// ----------------------------------------------------------- file parser --

class FileParser {
 public:
  explicit FileParser(std::string_view text) : toks_(tokenize(text)) {}

  TrsFile parse() {
    bool saw_rules = false;
    while (peek().kind != Tok::End) {
      expect(Tok::LParen, "expected '(' at top level");
      const Token& head = next();
      if (head.kind != Tok::Ident) {
        throw ParseError("line " + std::to_string(head.line) + ": expected a section name");
      }
      if (head.text == "VAR") {
        if (saw_var_) {
          throw ParseError("line " + std::to_string(head.line) + ": duplicate VAR section");
        }
        if (saw_rules) {
          throw ParseError("line " + std::to_string(head.line) +
                           ": VAR section must precede RULES");
        }
        saw_var_ = true;
        parse_var_section();
      } else if (head.text == "RULES") {
        if (saw_rules) {
          throw ParseError("line " + std::to_string(head.line) + ": duplicate RULES section");
        }
        saw_rules = true;
        parse_rules_section();
      } else {
        skip_section(head.line);
      }
    }
    if (!saw_rules) throw ParseError("missing RULES section");
    return TrsFile{Trs(sig_, rules_), var_names_};
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  void expect(Tok kind, const std::string& what) {
    const Token& t = next();
    if (t.kind != kind) {
      throw ParseError("line " + std::to_string(t.line) + ": " + what + ", found '" + t.text +
                       "'");
    }
  }

  void parse_var_section() {
    while (peek().kind == Tok::Ident) {
      const Token& t = next();
      if (std::find(var_names_.begin(), var_names_.end(), t.text) != var_names_.end()) {
        throw ParseError("line " + std::to_string(t.line) + ": variable '" + t.text +
                         "' declared twice");
      }
      var_names_.push_back(t.text);
    }
    expect(Tok::RParen, "expected ')' closing the VAR section");
  }

  void parse_rules_section() {
    while (peek().kind != Tok::RParen) {
      if (peek().kind == Tok::End) {
        throw ParseError("line " + std::to_string(peek().line) + ": unterminated RULES section");
      }
      Term lhs = parse_term();
      expect(Tok::Arrow, "expected '->' between rule sides");
      Term rhs = parse_term();
      rules_.push_back(Rule{std::move(lhs), std::move(rhs)});
    }
    next();  // ')'
  }

  int var_index_of(const std::string& name) const {
    auto it = std::find(var_names_.begin(), var_names_.end(), name);
    if (it == var_names_.end()) return 0;
    return static_cast<int>(it - var_names_.begin()) + 1;
  }

  Term parse_term() {
    const Token& head = next();
    if (head.kind != Tok::Ident) {
      throw ParseError("line " + std::to_string(head.line) + ": expected a term, found '" +
                       head.text + "'");
    }
    int vi = var_index_of(head.text);
    if (peek().kind != Tok::LParen) {
      if (vi > 0) return Term::var(vi);
      return Term::app(intern(head.text, 0, head.line), {});
    }
    if (vi > 0) {
      throw ParseError("line " + std::to_string(head.line) + ": variable '" + head.text +
                       "' used with arguments");
    }
    next();  // '('
    std::vector<Term> args;
    if (peek().kind == Tok::RParen) {
      throw ParseError("line " + std::to_string(peek().line) + ": '" + head.text +
                       "()' — use a bare constant instead of empty parentheses");
    }
    args.push_back(parse_term());
    while (peek().kind == Tok::Comma) {
      next();
      args.push_back(parse_term());
    }
    expect(Tok::RParen, "expected ')' or ',' in the argument list of '" + head.text + "'");
    SymbolId f = intern(head.text, static_cast<int>(args.size()), head.line);
    return Term::app(f, std::move(args));
  }

  SymbolId intern(const std::string& name, int arity, int line) {
    if (auto f = sig_.find(name)) {
      if (sig_.at(*f).arity != arity) {
        throw ParseError("line " + std::to_string(line) + ": symbol '" + name + "' used with " +
                         std::to_string(arity) + " argument(s) but previously with " +
                         std::to_string(sig_.at(*f).arity));
      }
      return *f;
    }
    return sig_.add(name, arity);
  }

  void skip_section(int line) {
    int depth = 1;  // the '(' that opened this section
    while (depth > 0) {
      const Token& t = next();
      if (t.kind == Tok::End) {
        throw ParseError("line " + std::to_string(line) + ": unterminated section");
      }
      if (t.kind == Tok::LParen) ++depth;
      if (t.kind == Tok::RParen) --depth;
    }
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  bool saw_var_ = false;
  std::vector<std::string> var_names_;
  Signature sig_;
  std::vector<Rule> rules_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TrsFile parse_trs_text(std::string_view text) { return FileParser(text).parse(); }

TrsFile parse_trs_file(const std::string& path) {
  try {
    return parse_trs_text(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string render_trs(const Trs& trs, const std::vector<std::string>& var_names) {
  // Collect the variable indices actually used, in index order.
  int max_index = 0;
  for (const Rule& r : trs.rules()) {
    max_index = std::max(max_index, max_var_index(r.lhs));
    max_index = std::max(max_index, max_var_index(r.rhs));
  }
  std::vector<std::string> names;
  for (int i = 1; i <= max_index; ++i) {
    if (i <= static_cast<int>(var_names.size())) {
      names.push_back(var_names[i - 1]);
    } else {
      names.push_back("x" + std::to_string(i));
    }
  }
  std::ostringstream out;
  out << "(VAR";
  for (const std::string& n : names) out << ' ' << n;
  out << ")\n(RULES\n";
  for (const Rule& r : trs.rules()) {
    out << "  " << to_string(r.lhs, trs.signature(), names) << " -> "
        << to_string(r.rhs, trs.signature(), names) << '\n';
  }
  out << ")\n";
  return out.str();
}

// ------------------------------------------------------------- matrices --

IntMatrix parse_matrix_text(std::string_view text) {
  std::vector<std::vector<Int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<Int> row;
    std::string tok;
    while (ls >> tok) {
      try {
        row.emplace_back(tok);
      } catch (const std::exception&) {
        throw MatrixError("line " + std::to_string(line_no) + ": '" + tok +
                          "' is not an integer");
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw MatrixError("line " + std::to_string(line_no) + ": row has " +
                        std::to_string(row.size()) + " entries, expected " +
                        std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw MatrixError("empty matrix");
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MatrixError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_matrix_text(ss.str());
  } catch (const MatrixError& e) {
    throw MatrixError(path + ": " + e.what());
  }
}

// ------------------------------------------------------------- scripts --

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string describe_step(const TietzeStep& step, const Trs& trs,
                          const std::vector<std::string>& names) {
  switch (step.kind) {
    case TietzeKind::AddSymbol:
      return "add-symbol " + step.symbol_name + "/" + std::to_string(step.arity) +
             " defined by " + to_string(*step.definition, trs.signature(), names);
    case TietzeKind::RemoveSymbol:
      return "remove-symbol " + step.symbol_name;
    case TietzeKind::AddRule:
      return "add-rule " + to_string(*step.lhs, trs.signature(), names) + " -> " +
             to_string(*step.rhs, trs.signature(), names);
    case TietzeKind::RemoveRule:
      return "remove-rule " + to_string(*step.lhs, trs.signature(), names) + " -> " +
             to_string(*step.rhs, trs.signature(), names);
  }
  return "?";
}

}  // namespace

TietzeRunResult run_tietze_script(const std::string& script_path, const TietzeOptions& opts) {
  std::ifstream in(script_path, std::ios::binary);
  if (!in) throw ParseError("cannot open script: " + script_path);
  const std::filesystem::path script_dir = std::filesystem::path(script_path).parent_path();

  bool have_trs = false;
  TrsFile current;
  std::vector<std::string> names;
  TietzeRunResult result;
  int step_no = 0;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const std::vector<std::string> words = split_ws(line);
    const std::string& cmd = words[0];
    auto fail = [&](const std::string& msg) -> void {
      throw ParseError(script_path + ":" + std::to_string(line_no) + ": " + msg);
    };

    if (cmd == "trs") {
      if (have_trs) fail("a script loads exactly one system");
      if (words.size() != 2) fail("usage: trs <path>");
      std::filesystem::path p(words[1]);
      if (p.is_relative()) p = script_dir / p;
      current = parse_trs_file(p.string());
      names = current.var_names;
      result.initial = current.trs;
      have_trs = true;
      continue;
    }
    if (!have_trs) fail("the first directive must be 'trs <path>'");

    if (cmd == "var") {
      if (words.size() < 2) fail("usage: var <name> ...");
      names.assign(words.begin() + 1, words.end());
      continue;
    }

    TietzeStep step;
    if (cmd == "add-symbol") {
      if (words.size() < 4) fail("usage: add-symbol <name> <arity> <term>");
      step.kind = TietzeKind::AddSymbol;
      step.symbol_name = words[1];
      try {
        step.arity = std::stoi(words[2]);
      } catch (const std::exception&) {
        fail("arity '" + words[2] + "' is not a number");
      }
      // The definition is everything after the third word.
      size_t name_at = line.find(words[1], cmd.size());
      size_t pos = line.find(words[2], name_at + words[1].size());
      std::string term_text = trim(line.substr(pos + words[2].size()));
      try {
        step.definition = parse_term(term_text, current.trs.signature(), names);
      } catch (const ParseError& e) {
        fail(e.what());
      }
    } else if (cmd == "remove-symbol") {
      if (words.size() != 2) fail("usage: remove-symbol <name>");
      step.kind = TietzeKind::RemoveSymbol;
      step.symbol_name = words[1];
    } else if (cmd == "add-rule" || cmd == "remove-rule") {
      step.kind = cmd == "add-rule" ? TietzeKind::AddRule : TietzeKind::RemoveRule;
      const std::string rest = trim(line.substr(cmd.size()));
      size_t arrow = rest.find("->");
      if (arrow == std::string::npos) fail("usage: " + cmd + " <term> -> <term>");
      try {
        step.lhs = parse_term(trim(rest.substr(0, arrow)), current.trs.signature(), names);
        step.rhs = parse_term(trim(rest.substr(arrow + 2)), current.trs.signature(), names);
      } catch (const ParseError& e) {
        fail(e.what());
      }
    } else {
      fail("unknown directive '" + cmd + "'");
    }

    ++step_no;
    const std::string what = describe_step(step, current.trs, names);
    current.trs = tietze_apply(current.trs, step, opts, step_no);
    result.step_summaries.push_back("step " + std::to_string(step_no) + ": " + what);
  }
  if (!have_trs) throw ParseError(script_path + ": empty script (no 'trs' directive)");
  result.final_trs = current.trs;
  result.final_var_names = names;
  return result;
}

}  // namespace trsbound
