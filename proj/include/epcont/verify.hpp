#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "epcont/model.hpp"

namespace epcont {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 20261019;
  std::string figure_dir = "figures";  // where the figure CSVs are written
};

/// count parameter sets drawn from alpha in [-2, 2], beta in [-5, 5] with
/// |beta| >= 0.05, q in [0.3, 2], keeping only those that pass
/// validate_no_singularity. Deterministic in seed.
std::vector<ModelParams> draw_valid_params(std::uint64_t seed, std::size_t count);

/// Least-squares slope of log|y| against log|x|.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

/// The ten acceptance criteria, or only the one numbered `only`.
std::vector<CheckResult> run_acceptance(const SuiteOptions& options, std::optional<int> only = std::nullopt);

/// Per-module invariants evaluated for one parameter set.
std::vector<CheckResult> run_invariants(const ModelParams& p, const SuiteOptions& options);

/// One line per result: PASS/FAIL, id, name, measured vs tolerance, detail.
void print_results(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace epcont
