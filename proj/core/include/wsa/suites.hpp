#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wsa/state.hpp"

namespace wsa {

// Rejected configuration (violated theorem hypothesis, unknown suite or
// mutation id).  The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckResult {
  std::string id;
  std::string paper_ref;
  std::string status;    // "pass" | "fail" | "skip"
  std::string residual;  // first violating residual (fail) or reason (skip)
  long long millis = 0;
};

struct SuiteConfig {
  Instance inst;
  int cutoff = 1;        // vacuum-module weight cutoff for phi/ev
  bool c_zero = false;   // specialize c = 0 in the gen/d0 suites
  int jobs = 1;          // worker threads
  std::string mutate;    // named coefficient mutation, empty for none
  std::string cache;     // optional W-cache file path ("" = always rebuild)
};

struct SuiteReport {
  std::string suite;
  SuiteConfig cfg;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == "fail") return false;
    return true;
  }
};

// Run one verification suite: "gen", "d0", "ope", "phi", "ev", "appendix", or
// "all" (every suite whose hypotheses the instance satisfies; the others
// contribute a single skip entry).  Throws ConfigError for an individually
// selected suite whose hypotheses fail.
//
// Coefficient-ring policy: the ope suite always keeps c symbolic (its closed
// forms are identities in Q[alpha, c] and a c=0 run would blind the suite to
// c-coefficient errors); the phi suite always sets c = 0 (hypothesis of the
// homomorphism theorem).  The c_zero flag only affects the gen/d0 suites.
SuiteReport run_suite(const std::string& suite, const SuiteConfig& cfg);

// The named coefficient mutations accepted by SuiteConfig::mutate, one per
// suite.  Each must make its suite report at least one failing check.
std::vector<std::string> known_mutations();

// The grade of the minimal-grade component of u (grade of e_{A,B} = column
// block minus row block; ghosts graded like their matrix positions).
int min_grade(const State& u);

// Projection onto the minimal-grade homogeneous component; what the appendix
// calls the part "modulo higher terms".
State leading_component(const State& u);

// Load the W generators from the cache file if it matches the algebra
// (instance, engine version, d0-kernel spot check); otherwise rebuild, and
// rewrite the file when a path is given.
std::map<std::string, State> load_or_build_W(const Algebra& alg,
                                             const std::string& cache);

}  // namespace wsa
