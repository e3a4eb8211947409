#include "trsbound/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "trsbound/errors.hpp"

namespace trsbound {

namespace {

const std::vector<Term>& empty_args() {
  static const std::vector<Term> empty;
  return empty;
}

std::size_t hash_mix(std::size_t seed, std::size_t v) {
  // boost::hash_combine mixing constant.
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Signature

SymbolId Signature::add(std::string name, int arity) {
  if (name.empty()) throw SignatureError("symbol name must not be empty");
  if (arity < 0) throw SignatureError("negative arity for symbol '" + name + "'");
  if (by_name_.count(name))
    throw SignatureError("symbol '" + name + "' is already declared");
  SymbolId id = static_cast<SymbolId>(symbols_.size());
  by_name_.emplace(name, id);
  symbols_.push_back(Symbol{std::move(name), arity});
  return id;
}

SymbolId Signature::intern(std::string_view name, int arity) {
  auto it = by_name_.find(name);
  if (it != by_name_.end()) {
    const Symbol& sym = symbols_[it->second];
    if (sym.arity != arity)
      throw SignatureError("symbol '" + sym.name + "' used with arity " +
                           std::to_string(arity) + " but declared with arity " +
                           std::to_string(sym.arity));
    return it->second;
  }
  return add(std::string(name), arity);
}

std::optional<SymbolId> Signature::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const Symbol& Signature::at(SymbolId id) const {
  if (id < 0 || id >= size()) throw SignatureError("symbol id out of range");
  return symbols_[id];
}

bool Signature::symbols_same(const Signature& other) const {
  if (symbols_.size() != other.symbols_.size()) return false;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name != other.symbols_[i].name) return false;
    if (symbols_[i].arity != other.symbols_[i].arity) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Term

Term Term::var(int index) {
  if (index < 1) throw Error("variable index must be >= 1");
  Term t;
  t.var_ = index;
  t.size_ = 1;
  t.hash_ = hash_mix(0x5661u, static_cast<std::size_t>(index));
  return t;
}

Term Term::app(SymbolId f, std::vector<Term> args) {
  if (f < 0) throw Error("invalid symbol id");
  Term t;
  t.sym_ = f;
  t.size_ = 1;
  std::size_t h = hash_mix(0xa44u, static_cast<std::size_t>(f));
  for (const Term& a : args) {
    t.size_ += a.size();
    h = hash_mix(h, a.hash());
  }
  t.hash_ = h;
  if (!args.empty())
    t.args_ = std::make_shared<const std::vector<Term>>(std::move(args));
  return t;
}

const std::vector<Term>& Term::args() const {
  return args_ ? *args_ : empty_args();
}

bool Term::operator==(const Term& other) const {
  if (this == &other) return true;
  if (hash_ != other.hash_ || size_ != other.size_) return false;
  if (var_ != other.var_ || sym_ != other.sym_) return false;
  if (args_ == other.args_) return true;
  const std::vector<Term>& a = args();
  const std::vector<Term>& b = other.args();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

std::strong_ordering Term::operator<=>(const Term& other) const {
  if (is_var() != other.is_var())
    return is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (is_var()) return var_ <=> other.var_;
  if (auto c = sym_ <=> other.sym_; c != 0) return c;
  const std::vector<Term>& a = args();
  const std::vector<Term>& b = other.args();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return a.size() <=> b.size();
}

// ---------------------------------------------------------------------------
// Substitution

void Substitution::bind(int var, Term t) {
  if (var < 1) throw Error("variable index must be >= 1");
  if (t.is_var() && t.var_index() == var) {
    bindings_.erase(var);
    return;
  }
  bindings_.insert_or_assign(var, std::move(t));
}

std::optional<Term> Substitution::lookup(int var) const {
  auto it = bindings_.find(var);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Term operations

Term apply_subst(const Term& t, const Substitution& s) {
  if (s.empty()) return t;
  if (t.is_var()) {
    auto b = s.lookup(t.var_index());
    return b ? *b : t;
  }
  const std::vector<Term>& as = t.args();
  if (as.empty()) return t;
  std::vector<Term> out;
  out.reserve(as.size());
  bool changed = false;
  for (const Term& a : as) {
    out.push_back(apply_subst(a, s));
    if (!(out.back() == a)) changed = true;
  }
  if (!changed) return t;
  return Term::app(t.symbol(), std::move(out));
}

namespace {

bool occurs(int var, const Term& t) {
  if (t.is_var()) return t.var_index() == var;
  for (const Term& a : t.args())
    if (occurs(var, a)) return true;
  return false;
}

// Adds x_var -> value to s, substituting into existing bindings so that s
// stays idempotent.  value must already be fully s-applied and occurs-free.
void solve(Substitution& s, int var, const Term& value) {
  Substitution single;
  single.bind(var, value);
  if (single.empty()) return;  // identity binding
  std::vector<std::pair<int, Term>> updated;
  for (const auto& [v, u] : s.bindings()) updated.emplace_back(v, apply_subst(u, single));
  for (auto& [v, u] : updated) s.bind(v, std::move(u));
  s.bind(var, value);
}

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b) {
  Substitution s;
  std::vector<std::pair<Term, Term>> work{{a, b}};
  while (!work.empty()) {
    auto [x, y] = std::move(work.back());
    work.pop_back();
    Term u = apply_subst(x, s);
    Term v = apply_subst(y, s);
    if (u == v) continue;
    if (u.is_var()) {
      if (occurs(u.var_index(), v)) return std::nullopt;
      solve(s, u.var_index(), v);
      continue;
    }
    if (v.is_var()) {
      if (occurs(v.var_index(), u)) return std::nullopt;
      solve(s, v.var_index(), u);
      continue;
    }
    if (u.symbol() != v.symbol() || u.args().size() != v.args().size()) return std::nullopt;
    for (std::size_t i = 0; i < u.args().size(); ++i)
      work.emplace_back(u.args()[i], v.args()[i]);
  }
  return s;
}

namespace {

// Bindings are kept in a plain map during matching: repeated occurrences of a
// pattern variable must agree even when the first occurrence bound it to the
// identical variable, a case Substitution::bind would drop.
bool match_into(const Term& pattern, const Term& subject, std::map<int, Term>& b) {
  if (pattern.is_var()) {
    auto [it, inserted] = b.try_emplace(pattern.var_index(), subject);
    return inserted || it->second == subject;
  }
  if (subject.is_var()) return false;
  if (pattern.symbol() != subject.symbol()) return false;
  if (pattern.args().size() != subject.args().size()) return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_into(pattern.args()[i], subject.args()[i], b)) return false;
  return true;
}

}  // namespace

std::optional<Substitution> match_term(const Term& pattern, const Term& subject) {
  std::map<int, Term> b;
  if (!match_into(pattern, subject, b)) return std::nullopt;
  Substitution s;
  for (auto& [v, t] : b) s.bind(v, std::move(t));
  return s;
}

std::optional<Term> subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (int k : p) {
    if (cur->is_var()) return std::nullopt;
    const std::vector<Term>& as = cur->args();
    if (k < 1 || static_cast<std::size_t>(k) > as.size()) return std::nullopt;
    cur = &as[k - 1];
  }
  return *cur;
}

namespace {

Term replace_rec(const Term& t, const Position& p, std::size_t i, const Term& s) {
  if (i == p.size()) return s;
  if (t.is_var()) throw Error("invalid position: descends into a variable");
  const std::vector<Term>& as = t.args();
  int k = p[i];
  if (k < 1 || static_cast<std::size_t>(k) > as.size())
    throw Error("invalid position: argument index " + std::to_string(k) + " out of range");
  std::vector<Term> out = as;  // element copies share structure
  out[k - 1] = replace_rec(as[k - 1], p, i + 1, s);
  return Term::app(t.symbol(), std::move(out));
}

}  // namespace

Term replace_at(const Term& t, const Position& p, const Term& s) {
  return replace_rec(t, p, 0, s);
}

Term rename_apart(const Term& t, int offset) {
  if (offset < 0) throw Error("rename offset must be >= 0");
  if (offset == 0) return t;
  if (t.is_var()) return Term::var(t.var_index() + offset);
  const std::vector<Term>& as = t.args();
  if (as.empty()) return t;
  std::vector<Term> out;
  out.reserve(as.size());
  for (const Term& a : as) out.push_back(rename_apart(a, offset));
  return Term::app(t.symbol(), std::move(out));
}

int var_count(const Term& t, int i) {
  if (t.is_var()) return t.var_index() == i ? 1 : 0;
  int n = 0;
  for (const Term& a : t.args()) n += var_count(a, i);
  return n;
}

namespace {

void collect_var_counts(const Term& t, std::map<int, int>& out) {
  if (t.is_var()) {
    ++out[t.var_index()];
    return;
  }
  for (const Term& a : t.args()) collect_var_counts(a, out);
}

}  // namespace

std::map<int, int> var_counts(const Term& t) {
  std::map<int, int> out;
  collect_var_counts(t, out);
  return out;
}

int var_occurrences(const Term& t) {
  if (t.is_var()) return 1;
  int n = 0;
  for (const Term& a : t.args()) n += var_occurrences(a);
  return n;
}

int max_var_index(const Term& t) {
  if (t.is_var()) return t.var_index();
  int m = 0;
  for (const Term& a : t.args()) m = std::max(m, max_var_index(a));
  return m;
}

namespace {

void collect_symbol_counts(const Term& t, std::vector<long long>& out) {
  if (t.is_var()) return;
  if (t.symbol() >= static_cast<SymbolId>(out.size()))
    throw SignatureError("term mentions a symbol outside the signature");
  ++out[t.symbol()];
  for (const Term& a : t.args()) collect_symbol_counts(a, out);
}

}  // namespace

std::vector<long long> symbol_counts(const Term& t, const Signature& sig) {
  std::vector<long long> out(sig.size(), 0);
  collect_symbol_counts(t, out);
  return out;
}

int symbol_count(const Term& t, SymbolId f) {
  if (t.is_var()) return 0;
  int n = t.symbol() == f ? 1 : 0;
  for (const Term& a : t.args()) n += symbol_count(a, f);
  return n;
}

namespace {

void collect_positions(const Term& t, Position& here, bool fun_only,
                       std::vector<Position>& out) {
  if (!fun_only || !t.is_var()) out.push_back(here);
  if (t.is_var()) return;
  const std::vector<Term>& as = t.args();
  for (std::size_t i = 0; i < as.size(); ++i) {
    here.push_back(static_cast<int>(i) + 1);
    collect_positions(as[i], here, fun_only, out);
    here.pop_back();
  }
}

}  // namespace

std::vector<Position> positions(const Term& t) {
  std::vector<Position> out;
  Position here;
  collect_positions(t, here, false, out);
  return out;
}

std::vector<Position> fun_positions(const Term& t) {
  std::vector<Position> out;
  Position here;
  collect_positions(t, here, true, out);
  return out;
}

namespace {

void collect_subterms(const Term& t, std::vector<Term>& out) {
  if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  for (const Term& a : t.args()) collect_subterms(a, out);
}

}  // namespace

std::vector<Term> distinct_subterms(const Term& t) {
  std::vector<Term> out;
  collect_subterms(t, out);
  return out;
}

std::string position_to_string(const Position& p) {
  if (p.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(p[i]);
  }
  return s;
}

namespace {

void render(const Term& t, const Signature& sig,
            const std::vector<std::string>& var_names, std::string& out) {
  if (t.is_var()) {
    int i = t.var_index();
    if (i >= 1 && static_cast<std::size_t>(i) <= var_names.size() && !var_names[i - 1].empty())
      out += var_names[i - 1];
    else
      out += "x" + std::to_string(i);
    return;
  }
  out += sig.at(t.symbol()).name;
  const std::vector<Term>& as = t.args();
  if (as.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (i) out += ',';
    render(as[i], sig, var_names, out);
  }
  out += ')';
}

}  // namespace

std::string to_string(const Term& t, const Signature& sig,
                      const std::vector<std::string>& var_names) {
  std::string out;
  render(t, sig, var_names, out);
  return out;
}

// ---------------------------------------------------------------------------
// Term parsing
//
// Grammar:   term ::= name | name '(' term (',' term)* ')'
// Names use the identifier alphabet [A-Za-z0-9_+*'-]; "->" never starts an
// identifier, so "-x" is a name but "x->y" splits as "x", "->", "y".

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' ||
         c == '*' || c == '\'' || c == '-';
}

struct TermParser {
  std::string_view text;
  std::size_t pos = 0;
  const Signature& sig;
  const std::vector<std::string>& var_names;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos) + " in term '" +
                     std::string(text) + "'");
  }

  std::string_view lex_name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) {
      if (text[pos] == '-' && pos + 1 < text.size() && text[pos + 1] == '>') break;
      ++pos;
    }
    if (pos == start) fail("expected an identifier");
    return text.substr(start, pos - start);
  }

  std::optional<int> var_index_of(std::string_view name) const {
    for (std::size_t k = 0; k < var_names.size(); ++k)
      if (var_names[k] == name) return static_cast<int>(k) + 1;
    return std::nullopt;
  }

  Term parse() {
    Term t = parse_term();
    skip_ws();
    if (pos != text.size()) fail("trailing input after term");
    return t;
  }

  Term parse_term() {
    std::string_view name = lex_name();
    skip_ws();
    bool applied = pos < text.size() && text[pos] == '(';
    if (auto vi = var_index_of(name)) {
      if (applied) fail("variable '" + std::string(name) + "' used as a function symbol");
      return Term::var(*vi);
    }
    std::vector<Term> args;
    if (applied) {
      ++pos;  // '('
      skip_ws();
      if (pos < text.size() && text[pos] == ')') fail("empty argument list");
      while (true) {
        args.push_back(parse_term());
        skip_ws();
        if (pos >= text.size()) fail("unterminated argument list");
        if (text[pos] == ',') {
          ++pos;
          continue;
        }
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    auto id = sig.find(name);
    if (!id) throw ParseError("unknown symbol '" + std::string(name) + "'");
    const Symbol& sym = sig.at(*id);
    if (sym.arity != static_cast<int>(args.size()))
      throw ParseError("symbol '" + sym.name + "' expects " + std::to_string(sym.arity) +
                       " argument(s), got " + std::to_string(args.size()));
    return Term::app(*id, std::move(args));
  }
};

}  // namespace

Term parse_term(std::string_view text, const Signature& sig,
                const std::vector<std::string>& var_names) {
  TermParser p{text, 0, sig, var_names};
  return p.parse();
}

}  // namespace trsbound
