#include "frontier/estimators.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "frontier/errors.hpp"
#include "frontier/numerics.hpp"

namespace frontier {

Sample::Sample(int dimension) : dimension_(dimension) {
  if (dimension < 1) {
    throw std::invalid_argument("Sample: dimension must be >= 1");
  }
}

Sample Sample::from_xy(std::vector<double> x, std::vector<double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("Sample::from_xy: column lengths differ");
  }
  Sample s(1);
  s.xs_.reserve(x.size());
  s.ys_.reserve(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) s.add(x[i], y[i]);
  return s;
}

void Sample::add(std::span<const double> x, double y) {
  if (static_cast<int>(x.size()) != dimension_) {
    throw std::invalid_argument("Sample::add: covariate dimension mismatch");
  }
  if (!(y >= 0.0)) {
    throw std::domain_error("Sample::add: responses must be non-negative");
  }
  xs_.insert(xs_.end(), x.begin(), x.end());
  ys_.push_back(y);
}

void Sample::add(double x, double y) { add(std::span<const double>(&x, 1), y); }

std::span<const double> Sample::x(std::size_t i) const {
  return std::span<const double>(xs_.data() + i * dimension_, dimension_);
}

void EstimatorConfig::validate(int sample_dimension) const {
  if (!(p >= 1.0)) {
    throw std::domain_error("EstimatorConfig: p must be >= 1");
  }
  if (!(h > 0.0)) {
    throw std::domain_error("EstimatorConfig: h must be positive");
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("EstimatorConfig: alpha must lie in (0,1]");
  }
  if (kernel.dimension() != sample_dimension) {
    throw std::domain_error("EstimatorConfig: kernel dimension does not match sample");
  }
}

namespace {

// Kernel-weighted local sums at x: weights w_i = K_h(x-X_i), the log-domain
// numerator terms p*log(y_i) + log(w_i), and the count of touched points.
// Zero-weight points are skipped entirely, so far-away points leave the
// result bit-identical.
struct LocalSums {
  LogWeightedPowerSum numerator;
  double weight_sum = 0.0;
  int n_effective = 0;
};

LocalSums accumulate_local(const Sample& sample, const EstimatorConfig& cfg,
                           std::span<const double> x, bool with_numerator) {
  const int d = sample.dimension();
  if (static_cast<int>(x.size()) != d) {
    throw std::domain_error("estimator: evaluation point dimension mismatch");
  }
  const double inv_h = 1.0 / cfg.h;
  const double inv_hd = std::pow(inv_h, d);
  const std::span<const double> xs = sample.xs();
  const std::span<const double> ys = sample.ys();

  LocalSums sums;
  const std::size_t n = sample.size();
  for (std::size_t i = 0; i < n; ++i) {
    double ss = 0.0;
    const double* xi = xs.data() + i * static_cast<std::size_t>(d);
    for (int j = 0; j < d; ++j) {
      const double diff = x[j] - xi[j];
      ss += diff * diff;
    }
    const double r = std::sqrt(ss) * inv_h;
    if (r > 1.0) continue;
    const double w = cfg.kernel.radial(r) * inv_hd;
    if (!(w > 0.0)) continue;
    sums.weight_sum += w;
    ++sums.n_effective;
    if (with_numerator) {
      // log(0) = -inf marks y_i = 0 terms; they vanish in the log-sum.
      sums.numerator.add(cfg.p * std::log(ys[i]) + std::log(w));
    }
  }
  return sums;
}

PointEstimate estimate_with_log_constant(const Sample& sample,
                                         const EstimatorConfig& cfg,
                                         double log_constant,
                                         std::span<const double> x) {
  if (sample.empty()) {
    throw std::domain_error("estimate_frontier: empty sample");
  }
  cfg.validate(sample.dimension());
  const LocalSums sums = accumulate_local(sample, cfg, x, true);
  PointEstimate est;
  est.n_effective = sums.n_effective;
  if (sums.n_effective == 0) {
    return est;  // defined = false, NaN sentinel
  }
  est.defined = true;
  const double log_num = sums.numerator.log_sum();
  if (log_num == log_zero) {
    est.value = 0.0;  // every response in the window is zero
    return est;
  }
  est.value = std::exp(
      (log_constant + log_num - std::log(sums.weight_sum)) / cfg.p);
  return est;
}

}  // namespace

double phi_hat(const Sample& sample, const EstimatorConfig& cfg,
               std::span<const double> x) {
  if (sample.empty()) {
    throw std::domain_error("phi_hat: empty sample");
  }
  cfg.validate(sample.dimension());
  const LocalSums sums = accumulate_local(sample, cfg, x, true);
  if (sums.n_effective == 0) return 0.0;
  const double log_num = sums.numerator.log_sum();
  if (log_num == log_zero) return 0.0;
  return std::exp(std::log1p(cfg.p) + log_num) / static_cast<double>(sample.size());
}

double f_hat(const Sample& sample, const EstimatorConfig& cfg,
             std::span<const double> x) {
  if (sample.empty()) {
    throw std::domain_error("f_hat: empty sample");
  }
  cfg.validate(sample.dimension());
  const LocalSums sums = accumulate_local(sample, cfg, x, false);
  return sums.weight_sum / static_cast<double>(sample.size());
}

double r_hat(const Sample& sample, const EstimatorConfig& cfg,
             std::span<const double> x) {
  const double f = f_hat(sample, cfg, x);
  if (!(f > 0.0)) {
    throw DegenerateError("r_hat: zero kernel mass at evaluation point");
  }
  return phi_hat(sample, cfg, x) / f;
}

PointEstimate estimate_frontier(const Sample& sample, const EstimatorConfig& cfg,
                                std::span<const double> x) {
  return estimate_with_log_constant(sample, cfg, std::log1p(cfg.p), x);
}

PointEstimate estimate_frontier_corrected(const Sample& sample,
                                          const EstimatorConfig& cfg,
                                          double gamma,
                                          std::span<const double> x) {
  if (!(gamma > 0.0)) {
    throw std::domain_error("estimate_frontier_corrected: gamma must be positive");
  }
  // B(1+p, 1) = 1/(1+p), so gamma = 1 shares the exact constant of
  // estimate_frontier and the two agree bit for bit.
  const double log_constant =
      (gamma == 1.0) ? std::log1p(cfg.p)
                     : -(std::log(gamma) + log_beta(1.0 + cfg.p, gamma));
  return estimate_with_log_constant(sample, cfg, log_constant, x);
}

double phi_hat(const Sample& sample, const EstimatorConfig& cfg, double x) {
  return phi_hat(sample, cfg, std::span<const double>(&x, 1));
}
double f_hat(const Sample& sample, const EstimatorConfig& cfg, double x) {
  return f_hat(sample, cfg, std::span<const double>(&x, 1));
}
double r_hat(const Sample& sample, const EstimatorConfig& cfg, double x) {
  return r_hat(sample, cfg, std::span<const double>(&x, 1));
}
PointEstimate estimate_frontier(const Sample& sample, const EstimatorConfig& cfg,
                                double x) {
  return estimate_frontier(sample, cfg, std::span<const double>(&x, 1));
}
PointEstimate estimate_frontier_corrected(const Sample& sample,
                                          const EstimatorConfig& cfg,
                                          double gamma, double x) {
  return estimate_frontier_corrected(sample, cfg, gamma,
                                     std::span<const double>(&x, 1));
}

std::size_t StepEstimate::cell_index(double x) const {
  if (!(x >= lo && x <= hi)) {
    throw std::domain_error("StepEstimate: point outside the support interval");
  }
  const std::size_t n = n_cells();
  const double t = (x - lo) / (hi - lo);
  std::size_t cell = static_cast<std::size_t>(t * static_cast<double>(n));
  if (cell >= n) cell = n - 1;  // x == hi
  return cell;
}

PointEstimate StepEstimate::at(double x) const {
  const std::size_t cell = cell_index(x);
  PointEstimate est;
  est.n_effective = counts[cell];
  if (counts[cell] == 0) return est;
  est.defined = true;
  est.value = values[cell];
  return est;
}

StepEstimate estimate_geffroy(const Sample& sample, std::size_t n_cells,
                              double lo, double hi) {
  if (sample.dimension() != 1) {
    throw std::invalid_argument("estimate_geffroy: one-dimensional samples only");
  }
  if (n_cells < 1) {
    throw std::domain_error("estimate_geffroy: need at least one cell");
  }
  if (!(hi > lo)) {
    throw std::domain_error("estimate_geffroy: empty support interval");
  }
  StepEstimate step;
  step.lo = lo;
  step.hi = hi;
  step.values.assign(n_cells, 0.0);
  step.counts.assign(n_cells, 0);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const std::size_t cell = step.cell_index(sample.x(i)[0]);
    step.values[cell] = std::max(step.values[cell], sample.y(i));
    ++step.counts[cell];
  }
  return step;
}

double sigma_hat_inv(const Sample& sample, const EstimatorConfig& cfg,
                     std::span<const double> x) {
  const double f = f_hat(sample, cfg, x);
  if (!(f > 0.0)) {
    throw DegenerateError("sigma_hat_inv: zero density estimate at evaluation point");
  }
  const double nhd =
      static_cast<double>(sample.size()) * std::pow(cfg.h, sample.dimension());
  return std::sqrt((2.0 * cfg.p + 1.0) * nhd) *
         std::sqrt(f / cfg.kernel.l2_moment());
}

double sigma_hat_inv(const Sample& sample, const EstimatorConfig& cfg, double x) {
  return sigma_hat_inv(sample, cfg, std::span<const double>(&x, 1));
}

std::optional<ConfidenceBand> confidence_band(const Sample& sample,
                                              const EstimatorConfig& cfg,
                                              std::span<const double> x,
                                              double level) {
  if (!(level > 0.0 && level < 1.0)) {
    throw std::domain_error("confidence_band: level must lie in (0,1)");
  }
  const PointEstimate est = estimate_frontier(sample, cfg, x);
  if (!est.defined) return std::nullopt;
  const double z = normal_quantile(0.5 * (1.0 + level));
  ConfidenceBand band;
  band.center = est.value;
  band.half_width_rel = z / sigma_hat_inv(sample, cfg, x);
  band.level = level;
  return band;
}

std::optional<ConfidenceBand> confidence_band(const Sample& sample,
                                              const EstimatorConfig& cfg,
                                              double x, double level) {
  return confidence_band(sample, cfg, std::span<const double>(&x, 1), level);
}

}  // namespace frontier
