#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trsbound/int_matrix.hpp"
#include "trsbound/tietze.hpp"
#include "trsbound/trs.hpp"

namespace trsbound {

/// A parsed system file: the system plus the declared variable names
/// (the k-th declared name is variable x_k in every parsed term).
struct TrsFile {
  Trs trs;
  std::vector<std::string> var_names;
};

/// Parses the standard prefix-notation system format:
///
///   (VAR x y z)
///   (RULES
///     f(x,y) -> y
///     ...
///   )
///
/// The signature is inferred from the rules (first occurrence fixes the
/// arity; later occurrences must agree).  Unknown parenthesized sections are
/// skipped; text outside sections is an error.
TrsFile parse_trs_text(std::string_view text);
TrsFile parse_trs_file(const std::string& path);

/// Renders a system in the same format; parse(render(parse(f))) equals
/// parse(f).  Variables are named from var_names where possible, x<i>
/// otherwise.
std::string render_trs(const Trs& trs, const std::vector<std::string>& var_names = {});

/// Parses a whitespace-separated integer matrix, one row per line; '#'
/// starts a comment.  Rows must have equal length and at least one entry.
IntMatrix parse_matrix_text(std::string_view text);
IntMatrix parse_matrix_file(const std::string& path);

/// Outcome of running a transformation script (see docs/formats.md):
///
///   trs <path>                    load the initial system (relative to the script)
///   var <name> <name> ...         declare variable names for later terms
///   add-symbol <name> <arity> <term>
///   remove-symbol <name>
///   add-rule <term> -> <term>
///   remove-rule <term> -> <term>
struct TietzeRunResult {
  Trs initial;
  Trs final_trs;
  std::vector<std::string> step_summaries;  // one line per applied step
  std::vector<std::string> final_var_names;
};

/// Parses and applies a script, step by step; throws TietzeError (with the
/// step number) on the first rejected step, ParseError on bad syntax.
TietzeRunResult run_tietze_script(const std::string& script_path, const TietzeOptions& opts);

}  // namespace trsbound
