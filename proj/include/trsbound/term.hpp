#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trsbound {

/// Index of a function symbol within a Signature.
using SymbolId = int;

struct Symbol {
  std::string name;
  int arity = 0;
};

/// An unsorted first-order signature: an ordered list of named symbols with
/// fixed arities.  Symbol order is declaration order and is the column order
/// used by every occurrence-count vector derived from the signature.
class Signature {
 public:
  /// Adds a new symbol; throws SignatureError if the name is already taken.
  SymbolId add(std::string name, int arity);

  /// Returns the existing id when (name, arity) is already declared, adds the
  /// symbol when the name is new, and throws SignatureError on an arity clash.
  SymbolId intern(std::string_view name, int arity);

  std::optional<SymbolId> find(std::string_view name) const;
  const Symbol& at(SymbolId id) const;
  int size() const { return static_cast<int>(symbols_.size()); }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  bool operator==(const Signature& other) const { return symbols_same(other); }

 private:
  bool symbols_same(const Signature& other) const;

  std::vector<Symbol> symbols_;
  std::map<std::string, SymbolId, std::less<>> by_name_;
};

/// An immutable first-order term: a variable x_i (i >= 1) or an application
/// f(t_1, ..., t_k) whose argument count matches the arity of f.
///
/// Copies are cheap: argument vectors are immutable and shared.  Structural
/// hash and node count are cached at construction.
class Term {
 public:
  /// Placeholder value (no variable index, no symbol); build real terms with
  /// var() / app().  Useful only as a to-be-assigned struct member.
  Term() = default;

  /// Variable x_index; index must be >= 1.
  static Term var(int index);
  /// Application of symbol f to args.  Arity consistency is the caller's
  /// contract (parsers and rule constructors validate against a Signature).
  static Term app(SymbolId f, std::vector<Term> args = {});

  bool is_var() const { return var_ != 0; }
  int var_index() const { return var_; }
  SymbolId symbol() const { return sym_; }
  const std::vector<Term>& args() const;

  /// Number of nodes (variables and applications) in the term.
  int size() const { return size_; }
  std::size_t hash() const { return hash_; }

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
  /// Structural order: variables before applications; variables by index;
  /// applications by symbol, then lexicographically by arguments.
  std::strong_ordering operator<=>(const Term& other) const;

 private:
  int var_ = 0;
  SymbolId sym_ = -1;
  std::shared_ptr<const std::vector<Term>> args_;
  int size_ = 1;
  std::size_t hash_ = 0;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// A path from the root: the empty position is the root, and position p.k
/// addresses the k-th argument (1-based) of the subterm at p.
using Position = std::vector<int>;

/// A finite mapping from variable indices to terms.  Identity bindings
/// x_i -> x_i are never stored.
class Substitution {
 public:
  /// Binds x_var to t, dropping identity bindings; overwrites silently.
  void bind(int var, Term t);
  std::optional<Term> lookup(int var) const;
  bool empty() const { return bindings_.empty(); }
  const std::map<int, Term>& bindings() const { return bindings_; }

  bool operator==(const Substitution& other) const { return bindings_ == other.bindings_; }

 private:
  std::map<int, Term> bindings_;
};

/// Applies s to t simultaneously: variables introduced by bindings are not
/// themselves substituted again.
Term apply_subst(const Term& t, const Substitution& s);

/// Most general unifier of a and b (occurs check included).  The result is
/// idempotent and satisfies apply_subst(a, *mgu) == apply_subst(b, *mgu).
std::optional<Substitution> unify(const Term& a, const Term& b);

/// One-sided matching: finds s with apply_subst(pattern, s) == subject.
/// Variables of the subject are inert (they match only themselves).
std::optional<Substitution> match_term(const Term& pattern, const Term& subject);

/// Subterm of t at position p, or nullopt when p is not a position of t.
std::optional<Term> subterm_at(const Term& t, const Position& p);

/// Replaces the subterm of t at p by s; throws Error when p is invalid.
Term replace_at(const Term& t, const Position& p, const Term& s);

/// Renames every variable x_i of t to x_{i+offset}; offset must be >= 0.
Term rename_apart(const Term& t, int offset);

/// Number of occurrences of x_i in t.
int var_count(const Term& t, int i);

/// Occurrence counts of every variable appearing in t (absent => zero).
std::map<int, int> var_counts(const Term& t);

/// Total number of variable occurrences in t.
int var_occurrences(const Term& t);

/// Largest variable index occurring in t; 0 when t is ground.
int max_var_index(const Term& t);

/// Occurrence count of every signature symbol in t, indexed by SymbolId.
std::vector<long long> symbol_counts(const Term& t, const Signature& sig);

/// Number of occurrences of symbol f in t.
int symbol_count(const Term& t, SymbolId f);

/// All positions of t in outermost-first, left-to-right (lexicographic) order.
std::vector<Position> positions(const Term& t);

/// The positions of t whose subterm is an application (non-variable).
std::vector<Position> fun_positions(const Term& t);

/// All distinct subterms of t (including t itself).
std::vector<Term> distinct_subterms(const Term& t);

std::string position_to_string(const Position& p);

/// Renders t in prefix notation; variables print as x1, x2, ... by default,
/// or using var_names (1-based: var_names[i-1] names x_i) when provided and
/// long enough.
std::string to_string(const Term& t, const Signature& sig,
                      const std::vector<std::string>& var_names = {});

/// Parses a prefix-notation term over a fixed signature.  The k-th entry of
/// var_names (k >= 1) names variable x_k.  Unknown names, arity mismatches,
/// and applied variables are errors.
Term parse_term(std::string_view text, const Signature& sig,
                const std::vector<std::string>& var_names);

}  // namespace trsbound
