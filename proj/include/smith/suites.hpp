#pragma once

// Seeded property suites. Every trial draws from its own stream split off the master seed, so
// a failure is replayed from (suite, p, seed, trial) alone.

#include <optional>

#include "smith/io.hpp"
#include "smith/model.hpp"

namespace smith {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int trials = 50;
  std::uint32_t p = 2;
  int lo = -3;
  int hi = 3;
  std::size_t max_dim = 6;
  std::vector<std::string> suites;
  /// Run only this trial index when set.
  std::optional<int> only_trial;
  /// Failing trials are written here as JSON when nonempty.
  std::string counterexample_dir;
};

Json to_json(const SuiteConfig& c);
/// {"seed", "trials", "maxDim", "window": [lo, hi], "p", "suites"}; missing keys keep defaults.
SuiteConfig suite_config_from_json(const Json& j);
/// Throws ParseError on a nonprime p, an empty window, maxDim < 0 or trials < 0.
void check_config(const SuiteConfig& c);

struct TrialFailure {
  int trial = 0;
  std::string message;
  std::string file;
};

struct SuiteReport {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<TrialFailure> failures;
  double wall_ms = 0;
};

struct RunReport {
  SuiteConfig config;
  std::vector<SuiteReport> suites;
  bool ok() const;
};

Json to_json(const RunReport& r, bool with_time = false);

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
/// Throws ParseError on an unknown suite name.
RunReport run_suites(const SuiteConfig& c);

/// A random instance of kind complex|map|arrow|square|dga|smith|module drawn from Rng(c.seed).
/// Algebras and modules use at most 3 (modules 2) dimensions per degree.
Json generate_instance(const std::string& kind, const SuiteConfig& c);

// ---------------------------------------------------------------------------
// Engineered negatives, shared with the tests

/// Lifting problems in Ch or Arr Ch that have no solution. kind in [0, 5), degree in [-2, 1].
struct NegativeLift {
  std::string name;
  std::optional<LiftingProblem> base;
  std::optional<ArrowLiftingProblem> arrow;
};
NegativeLift engineered_negative_lift(const Field& f, int kind, int degree);

/// Invalid Smith ideals or modules. kind in [0, 10); the instance is drawn from rng.
struct NegativeInstance {
  std::string name;
  std::optional<SmithIdeal> ideal;
  std::optional<SmithModule> module;
};
NegativeInstance engineered_negative_instance(Rng& rng, const GenConfig& cfg, int kind);

}  // namespace smith
