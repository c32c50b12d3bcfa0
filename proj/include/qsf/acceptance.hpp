#pragma once

// The acceptance battery: ten criteria, each a list of structured checks.

#include <string>
#include <vector>

#include "qsf/verifier.hpp"

namespace qsf::acceptance {

inline constexpr int kCriteria = 10;
inline constexpr double kCriterion1Seconds = 5.0;
inline constexpr double kSuiteSeconds = 60.0;

struct Options {
  unsigned threads = 0;      // 0 = hardware concurrency
  std::string oracle_path;   // empty = oracle::default_path()
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<verifier::CheckReport> checks;
  double seconds = 0.0;

  bool pass() const;
  int failed() const;
  int excluded() const;
};

/// Runs criterion id in 1..kCriteria.
CriterionResult run_criterion(int id, const Options& opt = {});

/// Runs all criteria in order.
std::vector<CriterionResult> run_all(const Options& opt = {});

/// Check that the whole battery finished within kSuiteSeconds.
verifier::CheckReport suite_runtime_check(double seconds);

}  // namespace qsf::acceptance
