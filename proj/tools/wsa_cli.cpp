// Command-line driver: `wsa gen` builds and caches the W generators of one
// instance; `wsa check` runs a verification suite and writes a JSON report.
// Exit codes: 0 all checks pass, 1 at least one failure, 2 configuration
// error.
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "wsa/miura.hpp"
#include "wsa/report.hpp"
#include "wsa/serialize.hpp"
#include "wsa/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for rectangular W-superalgebra "
               "generators and the affine (super) Yangian homomorphisms"};
  app.require_subcommand(1);

  int m = 2, n = 1, l = 2;
  std::string out;
  auto* gen = app.add_subcommand("gen", "build the W generators and write the cache file");
  gen->add_option("--m", m, "block size m")->required();
  gen->add_option("--n", n, "block size n")->required();
  gen->add_option("--l", l, "number of copies l")->required();
  gen->add_option("--out", out, "cache file path")->required();

  std::string suite, report_path, mutate;
  int cutoff = 1, jobs = 1;
  bool c_zero = false;
  std::string cache;
  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("--suite", suite,
                    "gen | d0 | ope | phi | ev | appendix | all")->required();
  check->add_option("--m", m, "block size m")->required();
  check->add_option("--n", n, "block size n")->required();
  check->add_option("--l", l, "number of copies l")->required();
  check->add_option("--cutoff", cutoff, "vacuum-module weight cutoff D");
  check->add_flag("--c-zero", c_zero, "specialize c = 0 in the gen/d0 suites");
  check->add_option("--jobs", jobs, "worker threads");
  check->add_option("--mutate", mutate, "named coefficient mutation id");
  check->add_option("--cache", cache, "W cache file to load or refresh");
  check->add_option("--report", report_path, "report JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      wsa::Algebra alg(wsa::Instance{m, n, l}, wsa::Algebra::Type::Amn);
      auto W = wsa::load_or_build_W(alg, out);
      std::printf("wrote %zu generator entries for (%d,%d,%d) to %s\n",
                  W.size(), m, n, l, out.c_str());
      return 0;
    }
    wsa::SuiteConfig cfg;
    cfg.inst = wsa::Instance{m, n, l};
    cfg.cutoff = cutoff;
    cfg.c_zero = c_zero;
    cfg.jobs = jobs;
    cfg.mutate = mutate;
    cfg.cache = cache;
    wsa::SuiteReport rep = wsa::run_suite(suite, cfg);
    wsa::write_report_file(report_path, rep);
    std::printf("%s\n", wsa::report_summary_line(rep).c_str());
    for (const auto& c : rep.checks)
      if (c.status == "fail")
        std::printf("FAIL %s [%s]\n  %s\n", c.id.c_str(), c.paper_ref.c_str(),
                    c.residual.c_str());
    return rep.all_pass() ? 0 : 1;
  } catch (const wsa::ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
