// trsbound — rule-count lower bounds for complete term rewriting systems.
//
// Subcommands:
//   analyze <system>             compute e(R), the lower bound, s(H2), s(H1)
//   cps <system>                 list critical pairs
//   snf [<matrix>]               Smith normal form of an integer matrix
//   equiv <base> <candidate>     decide whether two systems present the same theory
//   tietze <script>              apply a sequence of elementary transformations
//
// Exit codes: 0 success, 1 internal error, 2 input/parse error,
// 3 system not complete, 4 composite degree, 5 step budget exhausted,
// 6 transformation step rejected.

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "trsbound/conversion.hpp"
#include "trsbound/critical_pairs.hpp"
#include "trsbound/errors.hpp"
#include "trsbound/homology.hpp"
#include "trsbound/report.hpp"
#include "trsbound/smith.hpp"
#include "trsbound/tietze.hpp"
#include "trsbound/trs.hpp"
#include "trsbound/trs_file.hpp"

namespace {

using namespace trsbound;

struct CommonOpts {
  std::string strategy = "li";
  std::string format = "text";
  long long max_steps = 100000;
  long long search_depth = 50000;
  bool prime = false;
  bool verify_snf = false;
};

Strategy strategy_of(const CommonOpts& o) {
  return o.strategy == "lo" ? Strategy::LeftmostOutermost : Strategy::LeftmostInnermost;
}

ConversionLimits limits_of(const CommonOpts& o) {
  ConversionLimits l;
  l.node_budget = o.search_depth;
  return l;
}

void emit(const std::string& text, const ordered_json& j, const CommonOpts& o) {
  if (o.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

int cmd_analyze(const std::string& file, const CommonOpts& o) {
  TrsFile f = parse_trs_file(file);
  AnalyzeOptions opts;
  opts.strategy = strategy_of(o);
  opts.prime_only = o.prime;
  opts.max_steps = o.max_steps;
  opts.verify_snf = o.verify_snf;
  opts.system_name = stem_of(file);
  BoundReport r = analyze(f.trs, opts);
  emit(text_report(r), json_report(r), o);
  return 0;
}

int cmd_cps(const std::string& file, const CommonOpts& o) {
  TrsFile f = parse_trs_file(file);
  std::vector<CriticalPeak> cps = critical_pairs(f.trs);
  if (o.prime) cps = cp_filter_prime(f.trs, cps);
  emit(text_cps(f.trs, cps, f.var_names), json_cps(f.trs, cps, f.var_names), o);
  return 0;
}

int cmd_snf(const std::string& file, const CommonOpts& o) {
  IntMatrix m = [&] {
    if (file.empty() || file == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      return parse_matrix_text(ss.str());
    }
    return parse_matrix_file(file);
  }();
  SnfResult s = snf(m, o.verify_snf);
  bool verified = false;
  if (o.verify_snf) {
    const IntMatrix diag = s.diagonal(m.rows(), m.cols());
    if (!(*s.left * m * *s.right == diag)) {
      throw MatrixError("smith form verification failed: U*A*V does not match");
    }
    Int du = s.left->determinant();
    Int dv = s.right->determinant();
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) {
      throw MatrixError("smith form verification failed: transform is not unimodular");
    }
    verified = true;
  }
  emit(text_snf(m, s, verified), json_snf(m, s, verified), o);
  return 0;
}

int cmd_equiv(const std::string& base_file, const std::string& cand_file, const CommonOpts& o) {
  TrsFile base = parse_trs_file(base_file);
  TrsFile cand = parse_trs_file(cand_file);
  // The verdict is only meaningful against a complete base system: normal
  // forms must be canonical representatives.
  ConfluenceReport conf = local_confluence_check(base.trs, strategy_of(o), o.max_steps);
  if (!conf.locally_confluent) {
    const std::vector<CriticalPeak> cps = critical_pairs(base.trs);
    for (const JoinCheck& c : conf.checks) {
      if (!c.joinable) {
        const CriticalPeak& cp = cps.at(c.cp);
        throw NotCompleteError("base system is not complete: the critical pair of rules " +
                               std::to_string(cp.outer + 1) + " and " +
                               std::to_string(cp.inner + 1) + " at " +
                               position_to_string(cp.pos) + " does not join");
      }
    }
    throw NotCompleteError("base system is not complete");
  }
  EquivReport r = equiv_check(base.trs, cand.trs, strategy_of(o), o.max_steps, limits_of(o));
  std::vector<std::string> names = base.var_names;
  for (const std::string& n : cand.var_names) {
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  }
  emit(text_equiv(r, base.trs, cand.trs, names), json_equiv(r, base.trs, cand.trs, names), o);
  return 0;
}

int cmd_tietze(const std::string& script, const CommonOpts& o) {
  TietzeOptions opts;
  opts.strategy = strategy_of(o);
  opts.max_steps = o.max_steps;
  opts.limits = limits_of(o);
  TietzeRunResult r = run_tietze_script(script, opts);
  emit(text_tietze(r), json_tietze(r), o);
  return 0;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool strategy, bool steps, bool search, bool prime,
                bool verify) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  if (strategy) {
    cmd->add_option("--strategy", o.strategy,
                    "Normalization strategy: li (leftmost-innermost) or lo (leftmost-outermost)")
        ->check(CLI::IsMember({"li", "lo"}))
        ->capture_default_str();
  }
  if (steps) {
    cmd->add_option("--max-steps", o.max_steps, "Rewrite steps allowed per normalization")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
  if (search) {
    cmd->add_option("--search-depth", o.search_depth,
                    "Node budget for convertibility search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
  if (prime) {
    cmd->add_flag("--prime", o.prime, "Restrict to prime critical pairs");
  }
  if (verify) {
    cmd->add_flag("--verify-snf", o.verify_snf,
                  "Recompute the Smith form with transforms and check U*A*V");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological lower bounds on the rule count of complete rewriting systems"};
  app.set_version_flag("--version", "trsbound 1.0.0");
  app.require_subcommand(1);

  CommonOpts o;
  std::string file_a, file_b;
  std::function<int()> action;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Compute the rule-count lower bound");
  analyze_cmd->add_option("system", file_a, "System file")->required();
  add_common(analyze_cmd, o, true, true, false, true, true);
  analyze_cmd->callback([&] { action = [&] { return cmd_analyze(file_a, o); }; });

  CLI::App* cps_cmd = app.add_subcommand("cps", "List critical pairs");
  cps_cmd->add_option("system", file_a, "System file")->required();
  add_common(cps_cmd, o, false, false, false, true, false);
  cps_cmd->callback([&] { action = [&] { return cmd_cps(file_a, o); }; });

  CLI::App* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("matrix", file_a, "Matrix file ('-' or omitted: stdin)");
  add_common(snf_cmd, o, false, false, false, false, true);
  snf_cmd->callback([&] { action = [&] { return cmd_snf(file_a, o); }; });

  CLI::App* equiv_cmd =
      app.add_subcommand("equiv", "Decide whether two systems present the same theory");
  equiv_cmd->add_option("base", file_a, "Complete base system")->required();
  equiv_cmd->add_option("candidate", file_b, "Candidate system")->required();
  add_common(equiv_cmd, o, true, true, true, false, false);
  equiv_cmd->callback([&] { action = [&] { return cmd_equiv(file_a, file_b, o); }; });

  CLI::App* tietze_cmd =
      app.add_subcommand("tietze", "Apply a script of elementary transformations");
  tietze_cmd->add_option("script", file_a, "Transformation script")->required();
  add_common(tietze_cmd, o, true, true, true, false, false);
  tietze_cmd->callback([&] { action = [&] { return cmd_tietze(file_a, o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help/--version output or the usage error
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const CompositeDegreeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const NotCompleteError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const StepBudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const TietzeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 6;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const SignatureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const RuleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const MatrixError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
