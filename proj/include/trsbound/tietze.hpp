#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trsbound/conversion.hpp"
#include "trsbound/trs.hpp"

namespace trsbound {

/// The four presentation-preserving transformations.
///
/// AddSymbol    adds a fresh symbol f of given arity and the defining rule
///              t -> f(x1,...,xn), where t is a non-variable term over the
///              old signature with variables among x1..xn.
/// RemoveSymbol is its inverse: removes f together with its one defining
///              rule t -> f(x1,...,xn); f must occur nowhere else.
/// AddRule      adds t -> s provided t and s are convertible already.
/// RemoveRule   removes an existing rule t -> s provided t and s stay
///              convertible using the remaining rules.
enum class TietzeKind { AddSymbol, RemoveSymbol, AddRule, RemoveRule };

struct TietzeStep {
  TietzeKind kind;
  std::string symbol_name;        // AddSymbol / RemoveSymbol
  int arity = 0;                  // AddSymbol
  std::optional<Term> definition; // AddSymbol: t (over the pre-step signature)
  std::optional<Term> lhs;        // AddRule / RemoveRule
  std::optional<Term> rhs;        // AddRule / RemoveRule
};

struct TietzeOptions {
  Strategy strategy = Strategy::LeftmostInnermost;
  long long max_steps = 100000;  // budget of the normalize-and-compare fast path
  ConversionLimits limits;       // budget of the conversion search
};

/// Applies one transformation, verifying its side condition.  Derivability
/// conditions are established by strategy normalization first and bounded
/// conversion saturation second; if neither confirms them the step is
/// rejected (TietzeError) -- an unprovable side condition is never assumed.
/// step_no is only used in error messages (1-based).
Trs tietze_apply(const Trs& trs, const TietzeStep& step, const TietzeOptions& opts,
                 int step_no = 1);

/// Applies a whole sequence, failing on the first bad step.
Trs tietze_apply(const Trs& trs, const std::vector<TietzeStep>& steps,
                 const TietzeOptions& opts);

}  // namespace trsbound
