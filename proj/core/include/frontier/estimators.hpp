// Frontier estimators for samples (X_i, Y_i) whose support is bounded above
// by an unknown curve g: the power-transform kernel estimator
//
//   ghat(x) = ( (p+1) sum_i K_h(x-X_i) Y_i^p / sum_i K_h(x-X_i) )^{1/p},
//
// its tail-corrected variant, the per-cell maximum step estimator, and the
// pointwise confidence bands derived from the estimator's asymptotic
// normality.
#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "frontier/kernels.hpp"

namespace frontier {

// Observed pairs (x_i, y_i) with x_i in R^d and y_i >= 0, stored flat.
// Immutable in practice: estimators never mutate it and it can be shared
// across threads once filled.
class Sample {
 public:
  explicit Sample(int dimension = 1);

  /// Builds a one-dimensional sample from parallel columns.
  static Sample from_xy(std::vector<double> x, std::vector<double> y);

  void add(std::span<const double> x, double y);
  void add(double x, double y);  // d = 1 shortcut

  int dimension() const { return dimension_; }
  std::size_t size() const { return ys_.size(); }
  bool empty() const { return ys_.empty(); }

  std::span<const double> x(std::size_t i) const;
  double y(std::size_t i) const { return ys_[i]; }

  /// Flattened covariates, size() * dimension() values.
  std::span<const double> xs() const { return xs_; }
  std::span<const double> ys() const { return ys_; }

 private:
  int dimension_;
  std::vector<double> xs_;
  std::vector<double> ys_;
};

// Everything the estimator needs besides the data.
struct EstimatorConfig {
  double p = 1.0;       // power exponent, >= 1 (real-valued; sqrt(n) rules are not integral)
  double h = 1.0;       // bandwidth, > 0, in covariate units
  KernelSpec kernel{};  // defaults to the one-dimensional cosine-squared kernel
  double alpha = 1.0;   // frontier smoothness in (0,1]; consumed only by the rate rules

  void validate(int sample_dimension) const;
};

struct PointEstimate {
  double value = std::numeric_limits<double>::quiet_NaN();  // NaN sentinel when undefined
  int n_effective = 0;  // sample points with positive kernel weight at x
  bool defined = false;
};

// Pointwise band for the true frontier at one location, obtained by
// inverting the ratio pivot sigma^{-1}(x) (ghat/g - 1) ~ N(0,1):
// g in [center/(1+w), center/(1-w)] with w = z * sigma(x).
// When w >= 1 the inversion degenerates and the upper endpoint is infinite.
struct ConfidenceBand {
  double center = 0.0;          // ghat(x)
  double half_width_rel = 0.0;  // z / sigma_hat_inv(x)
  double level = 0.0;

  double lower() const { return center / (1.0 + half_width_rel); }
  double upper() const {
    if (half_width_rel >= 1.0) return std::numeric_limits<double>::infinity();
    return center / (1.0 - half_width_rel);
  }
  bool contains(double g) const { return lower() <= g && g <= upper(); }
};

/// Kernel regression estimate of (1/n) sum_i K_h(x-X_i) (p+1) Y_i^p,
/// accumulated in the log domain so large p cannot overflow intermediates.
double phi_hat(const Sample& sample, const EstimatorConfig& cfg,
               std::span<const double> x);

/// Kernel density estimate (1/n) sum_i K_h(x-X_i).
double f_hat(const Sample& sample, const EstimatorConfig& cfg,
             std::span<const double> x);

/// Regression estimate phi_hat / f_hat. Raises DegenerateError when the
/// kernel mass at x vanishes.
double r_hat(const Sample& sample, const EstimatorConfig& cfg,
             std::span<const double> x);

/// The frontier estimate at x. Zero kernel mass yields defined = false
/// rather than an error so grid sweeps can tolerate empty neighborhoods.
PointEstimate estimate_frontier(const Sample& sample, const EstimatorConfig& cfg,
                                std::span<const double> x);

/// Variant for a known response tail index gamma: the multiplicative
/// constant (p+1) becomes 1 / (gamma B(1+p, gamma)). gamma = 1 reproduces
/// estimate_frontier exactly.
PointEstimate estimate_frontier_corrected(const Sample& sample,
                                          const EstimatorConfig& cfg,
                                          double gamma,
                                          std::span<const double> x);

// One-dimensional conveniences.
double phi_hat(const Sample& sample, const EstimatorConfig& cfg, double x);
double f_hat(const Sample& sample, const EstimatorConfig& cfg, double x);
double r_hat(const Sample& sample, const EstimatorConfig& cfg, double x);
PointEstimate estimate_frontier(const Sample& sample, const EstimatorConfig& cfg,
                                double x);
PointEstimate estimate_frontier_corrected(const Sample& sample,
                                          const EstimatorConfig& cfg,
                                          double gamma, double x);

// Step-function frontier estimate over [lo, hi]: the support is split into
// equal cells and each cell takes the maximum response observed in it.
// Empty cells keep value 0 and are flagged.
struct StepEstimate {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> values;
  std::vector<int> counts;

  std::size_t n_cells() const { return values.size(); }
  bool cell_empty(std::size_t cell) const { return counts[cell] == 0; }

  /// Index of the cell containing x; x = hi maps into the last cell.
  std::size_t cell_index(double x) const;

  /// Step value at x; undefined (NaN value) over empty cells.
  PointEstimate at(double x) const;
};

/// Per-cell maximum estimator on n_cells equal cells of [lo, hi].
/// One-dimensional samples only; points outside [lo, hi] are a domain error.
StepEstimate estimate_geffroy(const Sample& sample, std::size_t n_cells,
                              double lo, double hi);

/// Plug-in inverse standard deviation of the ratio pivot:
/// sigma_hat_inv = ((2p+1) n h^d)^{1/2} (f_hat(x) / int K^2)^{1/2}.
/// Raises DegenerateError when f_hat(x) = 0.
double sigma_hat_inv(const Sample& sample, const EstimatorConfig& cfg,
                     std::span<const double> x);
double sigma_hat_inv(const Sample& sample, const EstimatorConfig& cfg, double x);

/// Pointwise band at confidence `level`; empty when the estimate itself is
/// undefined at x. level outside (0,1) is a domain error.
std::optional<ConfidenceBand> confidence_band(const Sample& sample,
                                              const EstimatorConfig& cfg,
                                              std::span<const double> x,
                                              double level);
std::optional<ConfidenceBand> confidence_band(const Sample& sample,
                                              const EstimatorConfig& cfg,
                                              double x, double level);

}  // namespace frontier
