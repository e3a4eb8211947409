#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trsbound/conversion.hpp"
#include "trsbound/critical_pairs.hpp"
#include "trsbound/homology.hpp"
#include "trsbound/smith.hpp"
#include "trsbound/trs.hpp"
#include "trsbound/trs_file.hpp"

namespace trsbound {

using ordered_json = nlohmann::ordered_json;

/// Renderers for the CLI.  Every renderer is deterministic: the same inputs
/// produce byte-identical output.

std::string text_report(const BoundReport& r);
ordered_json json_report(const BoundReport& r);

std::string text_cps(const Trs& trs, const std::vector<CriticalPeak>& cps,
                     const std::vector<std::string>& var_names);
ordered_json json_cps(const Trs& trs, const std::vector<CriticalPeak>& cps,
                      const std::vector<std::string>& var_names);

std::string text_snf(const IntMatrix& input, const SnfResult& snf, bool verified);
ordered_json json_snf(const IntMatrix& input, const SnfResult& snf, bool verified);

std::string text_equiv(const EquivReport& r, const Trs& base, const Trs& candidate,
                       const std::vector<std::string>& var_names);
ordered_json json_equiv(const EquivReport& r, const Trs& base, const Trs& candidate,
                        const std::vector<std::string>& var_names);

std::string text_tietze(const TietzeRunResult& r);
ordered_json json_tietze(const TietzeRunResult& r);

}  // namespace trsbound
