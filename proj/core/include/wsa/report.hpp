#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "wsa/suites.hpp"

namespace wsa {

// JSON report for one suite run:
//   {config: {...}, checks: [{id, paper_ref, status, residual?, millis}],
//    summary: {total, passed, failed, skipped, status}}
// Deterministic for a fixed config except for the millis fields.
nlohmann::json report_to_json(const SuiteReport& rep);

void write_report_file(const std::string& path, const SuiteReport& rep);

// One-line human summary, e.g. "phi (3,0,2) D=2: 262 checks, 262 passed".
std::string report_summary_line(const SuiteReport& rep);

}  // namespace wsa
