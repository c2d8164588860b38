// Subcommand implementations behind the frontier CLI. Kept out of main()
// so they can be exercised in-process by the test suite.
#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "frontier/experiment.hpp"

namespace frontier::cli {

// Stable exit-code contract.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;       // bad flags, enums, config keys
inline constexpr int exit_data = 2;        // malformed or empty input data
inline constexpr int exit_degenerate = 3;  // numerically degenerate result

struct EstimateOptions {
  std::string input_path;
  std::string output_path = "-";  // "-" writes to stdout
  std::optional<double> p;        // default: sqrt(n) rule
  std::optional<double> h;        // default: 4*sigma_hat(X)/sqrt(n) rule
  std::string kernel = "cosine2";
  std::optional<double> gamma;    // tail-corrected estimate when set
  std::size_t grid = 201;
  std::optional<double> ci_level;
  std::optional<double> xmin;     // grid range; defaults to the data range
  std::optional<double> xmax;
};

struct SimulateOptions {
  std::string frontier = "g1";
  std::string covariate = "uniform";
  double gamma = 1.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string output_path = "-";
};

struct ExperimentOptions {
  std::optional<std::string> config_path;
  std::optional<std::size_t> m;
  std::optional<std::uint64_t> seed;
  std::string output_path = "-";
  std::optional<std::string> trace_path;
  bool quiet = false;  // suppress the human-readable table on stdout
};

struct CoverageOptions {
  std::string frontier = "g2";
  std::string covariate = "uniform";
  std::size_t n = 1000;
  double level = 0.95;
  std::size_t m = 200;
  std::vector<double> points = {0.3, 0.5, 0.7};
  std::uint64_t seed = 42;
  std::string output_path = "-";
};

int run_estimate(const EstimateOptions& options);
int run_simulate(const SimulateOptions& options);
int run_experiment_cmd(const ExperimentOptions& options);
int run_coverage(const CoverageOptions& options);

/// Flat key=value experiment config ('#' comments and blank lines allowed).
/// Keys: n_values, gamma_values, covariate, frontier, m, grid_size,
/// estimators, seed. Unknown keys or bad values raise std::invalid_argument
/// with the line number.
ExperimentConfig parse_experiment_config(std::istream& in);

/// Human-readable table of an experiment report, one block per gamma.
std::string format_report_table(const ExperimentReport& report);

}  // namespace frontier::cli
