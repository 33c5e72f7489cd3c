// Runs every property suite at p = 2, 3, 5, 101 with 50 trials each, then replays the whole
// run and compares reports. One line per criterion; exit status 1 if any line fails.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "smith/suites.hpp"

using namespace smith;

namespace {

constexpr std::uint32_t kPrimes[] = {2, 3, 5, 101};
constexpr double kBudgetMs = 60000;

SuiteConfig config_for(const std::string& suite, std::uint32_t p, std::uint64_t seed, const std::string& dir) {
  SuiteConfig c;
  c.seed = seed;
  c.trials = 50;
  c.p = p;
  c.lo = -3;
  c.hi = 3;
  c.max_dim = 6;
  c.suites = {suite};
  c.counterexample_dir = dir;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 20240601;
  std::string dir = argc > 2 ? argv[2] : "acceptance-counterexamples";
  bool all_ok = true;
  std::vector<std::string> first_reports;
  int index = 0;

  for (const std::string& suite : suite_names()) {
    ++index;
    int passed = 0, failed = 0;
    double ms = 0;
    std::string first_failure;
    for (auto p : kPrimes) {
      RunReport r = run_suites(config_for(suite, p, seed, dir));
      first_reports.push_back(print_json(to_json(r)));
      for (const SuiteReport& s : r.suites) {
        passed += s.passed;
        failed += s.failed;
        ms += s.wall_ms;
        if (first_failure.empty() && !s.failures.empty())
          first_failure = "p=" + std::to_string(p) + " trial " + std::to_string(s.failures[0].trial) + ": " +
                          s.failures[0].message;
      }
    }
    bool ok = failed == 0 && passed == 50 * 4 && ms < kBudgetMs;
    all_ok = all_ok && ok;
    std::printf("%s %2d %-20s %d/%d trials  %.1f s%s%s\n", ok ? "PASS" : "FAIL", index, suite.c_str(), passed,
                passed + failed, ms / 1000, first_failure.empty() ? "" : "  first failure ", first_failure.c_str());
    std::fflush(stdout);
  }

  // replay: identical configs must give identical reports, wall time excluded
  auto start = std::chrono::steady_clock::now();
  std::size_t k = 0, mismatches = 0;
  for (const std::string& suite : suite_names())
    for (auto p : kPrimes)
      if (print_json(to_json(run_suites(config_for(suite, p, seed, dir)))) != first_reports[k++]) ++mismatches;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = mismatches == 0;
  all_ok = all_ok && ok;
  std::printf("%s %2d %-20s %zu/%zu reports identical  %.1f s\n", ok ? "PASS" : "FAIL", index + 1,
              "deterministic-replay", k - mismatches, k, secs);
  return all_ok ? 0 : 1;
}
