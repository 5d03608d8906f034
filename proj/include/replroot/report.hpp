#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "replroot/geometry.hpp"
#include "replroot/iterate.hpp"

namespace replroot {

using Json = nlohmann::ordered_json;

/// Everything a solve run produced, in a form that serializes losslessly:
/// counts and exact rationals travel as decimal strings.
struct RunReport {
  std::string polynomial;
  ShiftParams shift;
  SolveOptions options;
  std::vector<IterationRecord> iterations;
  RootEstimate result;
};

RunReport make_report(const std::string& polynomial_text, const ShiftParams& shift, const SolveOptions& options,
                      const SolveResult& solved);

Json to_json(const RunReport& report);
RunReport report_from_json(const Json& j);

Json to_json(const ConstructionTrace& trace);
ConstructionTrace trace_from_json(const Json& j);

/// Fixed four-decimal display, "0.7071 + 0.7071i".
std::string format_complex(Complex z, int decimals = 4);

/// Counts then the ratio column, one row per iteration, then a summary.
std::string format_table(const RunReport& report);
std::string format_csv(const RunReport& report);

}  // namespace replroot
