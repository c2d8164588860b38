// Monte Carlo comparison harness: data-driven parameter rules, grid L1
// error, replicated cells over (estimator, n, gamma), and an empirical
// coverage study for the pointwise confidence bands.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frontier/estimators.hpp"
#include "frontier/simulation.hpp"

namespace frontier {

// smoothed_kernel is a reserved slot (a bias-corrected smoothing of the
// step estimator); it has no implementation and requesting it fails the cell.
enum class EstimatorKind {
  PowerKernel,     // power-transform kernel estimate, p = sqrt(n)
  PowerKernelP1,   // same estimate pinned at p = 1 (rescaled regression)
  Geffroy,         // per-cell maximum step estimate
  CorrectedGamma,  // tail-corrected variant using the cell's gamma
  SmoothedKernel,
};

EstimatorKind parse_estimator_kind(std::string_view name);
std::string estimator_name(EstimatorKind kind);

/// Data-driven bandwidth h = 4 sigma_hat(X) / sqrt(n); one-dimensional
/// samples of size >= 2. A zero-variance covariate raises DegenerateError.
double rule_bandwidth(const Sample& sample);

/// Power exponent p = sqrt(n).
double rule_power(std::size_t n);

/// Asymptotic schedule h = n^{-1/(d+alpha)}.
double rate_bandwidth(std::size_t n, int d, double alpha);

/// Asymptotic schedule p = eps * n^{alpha/(d+alpha)}; eps is meant to decay
/// slowly with n and defaults to 1.
double rate_power(std::size_t n, int d, double alpha, double eps = 1.0);

struct L1Result {
  double error = std::numeric_limits<double>::quiet_NaN();
  double undefined_fraction = 0.0;
  bool valid = false;  // false when every grid point was undefined
};

/// Mean absolute deviation over defined grid points, scaled by the grid
/// span. Undefined points are excluded and counted, not imputed, so sparse
/// boundary neighborhoods surface in undefined_fraction instead of being
/// silently filled in.
L1Result l1_error(const std::function<PointEstimate(double)>& estimate,
                  const std::function<double(double)>& truth,
                  std::span<const double> grid);

/// size equally spaced points from lo to hi inclusive; size >= 2.
std::vector<double> uniform_grid(std::size_t size, double lo = 0.0,
                                 double hi = 1.0);

// Defaults are the reference comparison design (matching the error bands
// exercised by the acceptance suite).
struct ExperimentConfig {
  std::vector<std::size_t> n_values = {200, 300, 500, 1000};
  std::vector<double> gamma_values = {1.0, 2.0, 3.0};
  CovariateLaw covariate = CovariateLaw::Beta22;
  FrontierKind frontier = FrontierKind::G1;
  std::size_t m = 100;  // replications per cell
  std::size_t grid_size = 201;
  std::vector<EstimatorKind> estimators = {EstimatorKind::PowerKernel,
                                           EstimatorKind::PowerKernelP1,
                                           EstimatorKind::Geffroy};
  std::uint64_t base_seed = 42;

  void validate() const;
};

struct CellStats {
  double mean_l1 = std::numeric_limits<double>::quiet_NaN();
  double min_l1 = std::numeric_limits<double>::quiet_NaN();
  double max_l1 = std::numeric_limits<double>::quiet_NaN();
  double undefined_fraction = 0.0;  // mean over replications
  std::vector<double> replication_l1;  // per replication, NaN when invalid
};

struct CellRow {
  EstimatorKind estimator{};
  std::size_t n = 0;
  double gamma = 0.0;
  bool ok = false;
  std::string error;  // failure context when !ok
  CellStats stats;
};

struct ExperimentReport {
  std::vector<CellRow> cells;  // config order: estimator, then n, then gamma

  const CellRow* find(EstimatorKind estimator, std::size_t n, double gamma) const;
};

/// One (estimator, n, gamma) cell: replication r draws its sample from
/// base_seed XOR r, fits with the data-driven rules, and contributes one
/// grid L1 error. Deterministic for a fixed config, regardless of the
/// number of worker threads.
CellStats run_cell(const ExperimentConfig& config, EstimatorKind estimator,
                   std::size_t n, double gamma);

/// Every cell of the config. Per-cell failures are recorded in the report
/// rather than aborting the remaining cells.
ExperimentReport run_experiment(const ExperimentConfig& config);

struct CoveragePoint {
  double x = 0.0;
  double coverage = 0.0;          // fraction of defined bands containing g(x)
  std::size_t bands_defined = 0;  // replications with a defined band at x
  std::size_t replications = 0;
};

/// Empirical coverage of the pointwise bands under the uniform response law
/// (gamma = 1; anything else is a domain error, the normal approximation
/// behind the band is derived for that case).
std::vector<CoveragePoint> coverage_study(const FrontierModel& model,
                                          std::size_t n, double level,
                                          std::size_t m,
                                          std::span<const double> eval_points);

}  // namespace frontier
