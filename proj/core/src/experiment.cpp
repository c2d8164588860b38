#include "frontier/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "frontier/errors.hpp"
#include "frontier/numerics.hpp"

namespace frontier {

EstimatorKind parse_estimator_kind(std::string_view name) {
  if (name == "power_kernel") return EstimatorKind::PowerKernel;
  if (name == "power_kernel_p1") return EstimatorKind::PowerKernelP1;
  if (name == "geffroy") return EstimatorKind::Geffroy;
  if (name == "corrected_gamma") return EstimatorKind::CorrectedGamma;
  if (name == "smoothed_kernel") return EstimatorKind::SmoothedKernel;
  throw std::invalid_argument("unknown estimator '" + std::string(name) + "'");
}

std::string estimator_name(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::PowerKernel:
      return "power_kernel";
    case EstimatorKind::PowerKernelP1:
      return "power_kernel_p1";
    case EstimatorKind::Geffroy:
      return "geffroy";
    case EstimatorKind::CorrectedGamma:
      return "corrected_gamma";
    case EstimatorKind::SmoothedKernel:
      return "smoothed_kernel";
  }
  return "?";
}

double rule_bandwidth(const Sample& sample) {
  if (sample.dimension() != 1) {
    throw std::invalid_argument("rule_bandwidth: one-dimensional samples only");
  }
  if (sample.size() < 2) {
    throw std::domain_error("rule_bandwidth: need at least two points");
  }
  const double sigma = sample_stddev(sample.xs());
  if (!(sigma > 0.0)) {
    throw DegenerateError("rule_bandwidth: covariate sample has zero variance");
  }
  return 4.0 * sigma / std::sqrt(static_cast<double>(sample.size()));
}

double rule_power(std::size_t n) {
  if (n < 1) {
    throw std::domain_error("rule_power: n must be >= 1");
  }
  return std::sqrt(static_cast<double>(n));
}

double rate_bandwidth(std::size_t n, int d, double alpha) {
  if (n < 1 || d < 1 || !(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("rate_bandwidth: need n >= 1, d >= 1, alpha in (0,1]");
  }
  return std::pow(static_cast<double>(n), -1.0 / (d + alpha));
}

double rate_power(std::size_t n, int d, double alpha, double eps) {
  if (n < 1 || d < 1 || !(alpha > 0.0 && alpha <= 1.0) || !(eps > 0.0)) {
    throw std::domain_error("rate_power: need n >= 1, d >= 1, alpha in (0,1], eps > 0");
  }
  return eps * std::pow(static_cast<double>(n), alpha / (d + alpha));
}

std::vector<double> uniform_grid(std::size_t size, double lo, double hi) {
  if (size < 2) {
    throw std::domain_error("uniform_grid: need at least two points");
  }
  if (!(hi > lo)) {
    throw std::domain_error("uniform_grid: hi must exceed lo");
  }
  std::vector<double> grid(size);
  const double step = (hi - lo) / static_cast<double>(size - 1);
  for (std::size_t i = 0; i < size; ++i) {
    grid[i] = lo + step * static_cast<double>(i);
  }
  grid.back() = hi;
  return grid;
}

L1Result l1_error(const std::function<PointEstimate(double)>& estimate,
                  const std::function<double(double)>& truth,
                  std::span<const double> grid) {
  if (grid.size() < 2) {
    throw std::domain_error("l1_error: grid needs at least two points");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::domain_error("l1_error: grid must be strictly increasing");
    }
  }
  const double span = grid.back() - grid.front();
  double abs_sum = 0.0;
  std::size_t used = 0;
  std::size_t undefined = 0;
  for (double x : grid) {
    const PointEstimate est = estimate(x);
    if (!est.defined) {
      ++undefined;
      continue;
    }
    abs_sum += std::abs(est.value - truth(x));
    ++used;
  }
  L1Result result;
  result.undefined_fraction =
      static_cast<double>(undefined) / static_cast<double>(grid.size());
  if (used == 0) return result;  // invalid: nothing was defined
  result.error = span * abs_sum / static_cast<double>(used);
  result.valid = true;
  return result;
}

void ExperimentConfig::validate() const {
  if (m < 1) throw std::domain_error("ExperimentConfig: m must be >= 1");
  if (grid_size < 2) throw std::domain_error("ExperimentConfig: grid_size must be >= 2");
  if (n_values.empty()) throw std::domain_error("ExperimentConfig: no sample sizes");
  for (std::size_t n : n_values) {
    if (n < 2) throw std::domain_error("ExperimentConfig: sample sizes must be >= 2");
  }
  if (gamma_values.empty()) throw std::domain_error("ExperimentConfig: no gamma values");
  for (double g : gamma_values) {
    if (!(g > 0.0)) throw std::domain_error("ExperimentConfig: gamma values must be positive");
  }
  if (estimators.empty()) throw std::domain_error("ExperimentConfig: no estimators");
}

const CellRow* ExperimentReport::find(EstimatorKind estimator, std::size_t n,
                                      double gamma) const {
  for (const CellRow& row : cells) {
    if (row.estimator == estimator && row.n == n && row.gamma == gamma) {
      return &row;
    }
  }
  return nullptr;
}

namespace {

// Index-sharded parallel loop. Results must be written to preallocated
// per-index slots; the first exception wins and is rethrown after join.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t workers = std::min<std::size_t>(hw == 0 ? 1 : hw, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// One replication of one cell; returns the grid L1 result.
L1Result replicate_cell(const ExperimentConfig& config, EstimatorKind estimator,
                        std::size_t n, double gamma, std::size_t rep,
                        std::span<const double> grid) {
  FrontierModel model;
  model.frontier = config.frontier;
  model.gamma = gamma;
  model.covariate = config.covariate;
  model.seed = replication_seed(config.base_seed, rep);

  const Sample sample = generate_sample(model, n);
  const double h = rule_bandwidth(sample);
  const auto truth = [&model](double x) { return model.frontier_value(x); };

  switch (estimator) {
    case EstimatorKind::PowerKernel:
    case EstimatorKind::PowerKernelP1:
    case EstimatorKind::CorrectedGamma: {
      EstimatorConfig cfg;
      cfg.p = estimator == EstimatorKind::PowerKernelP1 ? 1.0 : rule_power(n);
      cfg.h = h;
      if (estimator == EstimatorKind::CorrectedGamma) {
        return l1_error(
            [&](double x) {
              return estimate_frontier_corrected(sample, cfg, gamma, x);
            },
            truth, grid);
      }
      return l1_error(
          [&](double x) { return estimate_frontier(sample, cfg, x); }, truth,
          grid);
    }
    case EstimatorKind::Geffroy: {
      // Cell count matched to the kernel rule's resolution.
      const auto n_cells = static_cast<std::size_t>(std::ceil(1.0 / h));
      const StepEstimate step = estimate_geffroy(sample, n_cells, 0.0, 1.0);
      return l1_error([&step](double x) { return step.at(x); }, truth, grid);
    }
    case EstimatorKind::SmoothedKernel:
      throw std::invalid_argument(
          "smoothed_kernel is a reserved estimator slot with no implementation");
  }
  throw std::logic_error("replicate_cell: unknown estimator");
}

}  // namespace

CellStats run_cell(const ExperimentConfig& config, EstimatorKind estimator,
                   std::size_t n, double gamma) {
  config.validate();
  if (n < 2) throw std::domain_error("run_cell: n must be >= 2");
  if (!(gamma > 0.0)) throw std::domain_error("run_cell: gamma must be positive");
  if (estimator == EstimatorKind::SmoothedKernel) {
    throw std::invalid_argument(
        "smoothed_kernel is a reserved estimator slot with no implementation");
  }

  const std::vector<double> grid = uniform_grid(config.grid_size);
  std::vector<L1Result> results(config.m);
  try {
    parallel_for(config.m, [&](std::size_t i) {
      results[i] = replicate_cell(config, estimator, n, gamma, i + 1, grid);
    });
  } catch (const std::exception& e) {
    throw std::runtime_error("cell (" + estimator_name(estimator) + ", n=" +
                             std::to_string(n) + ", gamma=" + std::to_string(gamma) +
                             "): " + e.what());
  }

  CellStats stats;
  stats.replication_l1.reserve(config.m);
  double sum = 0.0;
  std::size_t valid = 0;
  for (const L1Result& r : results) {
    stats.undefined_fraction += r.undefined_fraction;
    stats.replication_l1.push_back(r.valid ? r.error
                                           : std::numeric_limits<double>::quiet_NaN());
    if (!r.valid) continue;
    if (valid == 0) {
      stats.min_l1 = stats.max_l1 = r.error;
    } else {
      stats.min_l1 = std::min(stats.min_l1, r.error);
      stats.max_l1 = std::max(stats.max_l1, r.error);
    }
    sum += r.error;
    ++valid;
  }
  stats.undefined_fraction /= static_cast<double>(config.m);
  if (valid == 0) {
    throw DegenerateError("cell (" + estimator_name(estimator) + ", n=" +
                          std::to_string(n) + ", gamma=" + std::to_string(gamma) +
                          "): every replication produced an empty estimate grid");
  }
  stats.mean_l1 = sum / static_cast<double>(valid);
  return stats;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentReport report;
  for (EstimatorKind estimator : config.estimators) {
    for (std::size_t n : config.n_values) {
      for (double gamma : config.gamma_values) {
        CellRow row;
        row.estimator = estimator;
        row.n = n;
        row.gamma = gamma;
        try {
          row.stats = run_cell(config, estimator, n, gamma);
          row.ok = true;
        } catch (const std::exception& e) {
          row.ok = false;
          row.error = e.what();
        }
        report.cells.push_back(std::move(row));
      }
    }
  }
  return report;
}

std::vector<CoveragePoint> coverage_study(const FrontierModel& model,
                                          std::size_t n, double level,
                                          std::size_t m,
                                          std::span<const double> eval_points) {
  if (model.gamma != 1.0) {
    throw std::domain_error("coverage_study: requires gamma = 1");
  }
  if (m < 1) throw std::domain_error("coverage_study: m must be >= 1");
  if (n < 2) throw std::domain_error("coverage_study: n must be >= 2");
  if (!(level > 0.0 && level < 1.0)) {
    throw std::domain_error("coverage_study: level must lie in (0,1)");
  }
  if (eval_points.empty()) {
    throw std::domain_error("coverage_study: no evaluation points");
  }
  model.validate();

  const std::size_t k = eval_points.size();
  // Per replication, per point: +1 defined, +1 covered.
  std::vector<std::vector<char>> defined(m, std::vector<char>(k, 0));
  std::vector<std::vector<char>> covered(m, std::vector<char>(k, 0));

  parallel_for(m, [&](std::size_t i) {
    FrontierModel rep_model = model;
    rep_model.seed = replication_seed(model.seed, i + 1);
    const Sample sample = generate_sample(rep_model, n);
    EstimatorConfig cfg;
    cfg.p = rule_power(n);
    cfg.h = rule_bandwidth(sample);
    for (std::size_t j = 0; j < k; ++j) {
      const auto band = confidence_band(sample, cfg, eval_points[j], level);
      if (!band) continue;
      defined[i][j] = 1;
      covered[i][j] = band->contains(rep_model.frontier_value(eval_points[j])) ? 1 : 0;
    }
  });

  std::vector<CoveragePoint> out(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t n_defined = 0;
    std::size_t n_covered = 0;
    for (std::size_t i = 0; i < m; ++i) {
      n_defined += defined[i][j];
      n_covered += covered[i][j];
    }
    out[j].x = eval_points[j];
    out[j].bands_defined = n_defined;
    out[j].replications = m;
    out[j].coverage = n_defined == 0
                          ? 0.0
                          : static_cast<double>(n_covered) /
                                static_cast<double>(n_defined);
  }
  return out;
}

}  // namespace frontier
