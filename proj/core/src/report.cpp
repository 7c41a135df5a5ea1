#include "wsa/report.hpp"

#include <nlohmann/json.hpp>

#include "wsa/serialize.hpp"

namespace wsa {

nlohmann::json report_to_json(const SuiteReport& rep) {
  nlohmann::json j;
  j["config"] = {{"suite", rep.suite},
                 {"m", rep.cfg.inst.m},
                 {"n", rep.cfg.inst.n},
                 {"l", rep.cfg.inst.l},
                 {"cutoff", rep.cfg.cutoff},
                 {"c_zero", rep.cfg.c_zero},
                 {"jobs", rep.cfg.jobs},
                 {"mutate", rep.cfg.mutate}};
  nlohmann::json checks = nlohmann::json::array();
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& c : rep.checks) {
    nlohmann::json e = {{"id", c.id},
                        {"paper_ref", c.paper_ref},
                        {"status", c.status},
                        {"millis", c.millis}};
    if (!c.residual.empty()) e["residual"] = c.residual;
    checks.push_back(std::move(e));
    if (c.status == "pass") ++passed;
    else if (c.status == "fail") ++failed;
    else ++skipped;
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"total", rep.checks.size()},
                  {"passed", passed},
                  {"failed", failed},
                  {"skipped", skipped},
                  {"status", failed == 0 ? "pass" : "fail"}};
  return j;
}

void write_report_file(const std::string& path, const SuiteReport& rep) {
  write_json_file(path, report_to_json(rep));
}

std::string report_summary_line(const SuiteReport& rep) {
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& c : rep.checks) {
    if (c.status == "pass") ++passed;
    else if (c.status == "fail") ++failed;
    else ++skipped;
  }
  std::string s = rep.suite + " (" + std::to_string(rep.cfg.inst.m) + "," +
                  std::to_string(rep.cfg.inst.n) + "," +
                  std::to_string(rep.cfg.inst.l) + ") D=" +
                  std::to_string(rep.cfg.cutoff) + ": " +
                  std::to_string(rep.checks.size()) + " checks, " +
                  std::to_string(passed) + " passed";
  if (failed) s += ", " + std::to_string(failed) + " FAILED";
  if (skipped) s += ", " + std::to_string(skipped) + " skipped";
  return s;
}

}  // namespace wsa
