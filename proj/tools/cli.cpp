#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "frontier/errors.hpp"
#include "frontier/io.hpp"
#include "frontier/simulation.hpp"

namespace frontier::cli {

namespace {

// Maps thrown errors onto the exit-code contract shared by every subcommand.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const CsvError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_data;
  } catch (const DegenerateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_degenerate;
  } catch (const std::logic_error& e) {  // invalid_argument, domain_error
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_data;
  }
}

// Writes via fn to path, or to stdout when path is "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  fn(out);
}

std::vector<double> make_grid(double lo, double hi, std::size_t size) {
  if (hi < lo) {
    throw std::invalid_argument("estimate: grid range has xmax < xmin");
  }
  if (hi == lo || size == 1) {
    return {lo};
  }
  return uniform_grid(size, lo, hi);
}

std::uint64_t parse_uint64(const std::string& text) {
  std::size_t pos = 0;
  const unsigned long long v = std::stoull(text, &pos);
  if (pos != text.size()) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return v;
}

std::string trimmed(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, sep)) parts.push_back(trimmed(token));
  return parts;
}

}  // namespace

int run_estimate(const EstimateOptions& options) {
  return guarded([&] {
    Sample sample;
    if (options.input_path == "-") {
      sample = read_sample_csv(std::cin);
    } else {
      sample = read_sample_csv_file(options.input_path);
    }
    if (sample.empty()) {
      std::cerr << "error: empty sample\n";
      return exit_data;
    }
    if (options.grid < 1) {
      throw std::invalid_argument("estimate: --grid must be >= 1");
    }

    EstimatorConfig cfg;
    cfg.kernel = KernelSpec(parse_kernel_family(options.kernel), 1);
    if (options.p) {
      cfg.p = *options.p;
    } else {
      cfg.p = rule_power(sample.size());
      std::cerr << "estimate: using p = " << format_double(cfg.p)
                << " (sqrt(n) rule)\n";
    }
    if (options.h) {
      cfg.h = *options.h;
    } else {
      cfg.h = rule_bandwidth(sample);
      std::cerr << "estimate: using h = " << format_double(cfg.h)
                << " (4*stddev(x)/sqrt(n) rule)\n";
    }
    cfg.validate(1);
    if (options.gamma && !(*options.gamma > 0.0)) {
      throw std::invalid_argument("estimate: --gamma must be positive");
    }

    const auto xs = sample.xs();
    const double lo = options.xmin ? *options.xmin
                                   : *std::min_element(xs.begin(), xs.end());
    const double hi = options.xmax ? *options.xmax
                                   : *std::max_element(xs.begin(), xs.end());
    const std::vector<double> grid = make_grid(lo, hi, options.grid);

    std::vector<EstimateRow> rows;
    rows.reserve(grid.size());
    std::size_t defined = 0;
    for (double x : grid) {
      EstimateRow row;
      row.x = x;
      row.estimate = options.gamma
                         ? estimate_frontier_corrected(sample, cfg, *options.gamma, x)
                         : estimate_frontier(sample, cfg, x);
      if (row.estimate.defined) ++defined;
      if (options.ci_level && row.estimate.defined) {
        row.band = confidence_band(sample, cfg, x, *options.ci_level);
        if (row.band && options.gamma) {
          row.band->center = row.estimate.value;  // band around the corrected value
        }
      }
      rows.push_back(row);
    }
    if (defined == 0) {
      throw DegenerateError(
          "no grid point has sample mass within the bandwidth; "
          "widen --h or adjust --xmin/--xmax");
    }

    with_output(options.output_path, [&](std::ostream& out) {
      write_estimate_csv(out, rows, options.ci_level.has_value());
    });
    return exit_ok;
  });
}

int run_simulate(const SimulateOptions& options) {
  return guarded([&] {
    if (options.n == 0) {
      throw std::invalid_argument("simulate: --n must be >= 1");
    }
    FrontierModel model;
    model.frontier = parse_frontier_kind(options.frontier);
    model.covariate = parse_covariate_law(options.covariate);
    model.gamma = options.gamma;
    model.seed = options.seed;
    model.validate();

    const Sample sample = generate_sample(model, options.n);
    with_output(options.output_path,
                [&](std::ostream& out) { write_sample_csv(out, sample); });
    return exit_ok;
  });
}

ExperimentConfig parse_experiment_config(std::istream& in) {
  ExperimentConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string row = trimmed(line);
    if (row.empty()) continue;
    const auto eq = row.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key=value");
    }
    const std::string key = trimmed(row.substr(0, eq));
    const std::string value = trimmed(row.substr(eq + 1));
    try {
      if (key == "n_values") {
        config.n_values.clear();
        for (const std::string& v : split(value, ','))
          config.n_values.push_back(parse_uint64(v));
      } else if (key == "gamma_values") {
        config.gamma_values.clear();
        for (const std::string& v : split(value, ','))
          config.gamma_values.push_back(parse_double(v));
      } else if (key == "covariate") {
        config.covariate = parse_covariate_law(value);
      } else if (key == "frontier") {
        config.frontier = parse_frontier_kind(value);
      } else if (key == "m") {
        config.m = parse_uint64(value);
      } else if (key == "grid_size") {
        config.grid_size = parse_uint64(value);
      } else if (key == "estimators") {
        config.estimators.clear();
        for (const std::string& v : split(value, ','))
          config.estimators.push_back(parse_estimator_kind(v));
      } else if (key == "seed") {
        config.base_seed = parse_uint64(value);
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": " + e.what());
    }
  }
  config.validate();
  return config;
}

std::string format_report_table(const ExperimentReport& report) {
  // Preserve first-appearance order of gammas, sizes and estimators.
  std::vector<double> gammas;
  std::vector<std::size_t> sizes;
  std::vector<EstimatorKind> estimators;
  for (const CellRow& row : report.cells) {
    if (std::find(gammas.begin(), gammas.end(), row.gamma) == gammas.end())
      gammas.push_back(row.gamma);
    if (std::find(sizes.begin(), sizes.end(), row.n) == sizes.end())
      sizes.push_back(row.n);
    if (std::find(estimators.begin(), estimators.end(), row.estimator) ==
        estimators.end())
      estimators.push_back(row.estimator);
  }

  constexpr int col_width = 24;
  std::ostringstream out;
  char buf[64];
  for (double gamma : gammas) {
    out << "gamma = " << format_double(gamma) << '\n';
    out << "      n";
    for (EstimatorKind est : estimators) {
      std::snprintf(buf, sizeof(buf), "  %-*s", col_width, estimator_name(est).c_str());
      out << buf;
    }
    out << '\n';
    for (std::size_t n : sizes) {
      std::snprintf(buf, sizeof(buf), "%7zu", n);
      out << buf;
      for (EstimatorKind est : estimators) {
        const CellRow* row = report.find(est, n, gamma);
        if (row == nullptr || !row->ok) {
          std::snprintf(buf, sizeof(buf), "  %-*s", col_width, "-");
        } else {
          char cell[48];
          std::snprintf(cell, sizeof(cell), "%.3f [%.3f, %.3f]",
                        row->stats.mean_l1, row->stats.min_l1, row->stats.max_l1);
          std::snprintf(buf, sizeof(buf), "  %-*s", col_width, cell);
        }
        out << buf;
      }
      out << '\n';
    }
    out << '\n';
  }
  return out.str();
}

int run_experiment_cmd(const ExperimentOptions& options) {
  return guarded([&] {
    ExperimentConfig config;
    if (options.config_path) {
      std::ifstream in(*options.config_path);
      if (!in) {
        throw std::invalid_argument("cannot open config '" + *options.config_path + "'");
      }
      config = parse_experiment_config(in);
    }
    if (options.m) config.m = *options.m;
    if (options.seed) config.base_seed = *options.seed;
    config.validate();

    const ExperimentReport report = run_experiment(config);

    std::size_t failed = 0;
    for (const CellRow& row : report.cells) {
      if (!row.ok) {
        ++failed;
        std::cerr << "cell failed: " << row.error << '\n';
      }
    }

    with_output(options.output_path,
                [&](std::ostream& out) { out << report_to_csv(report); });
    if (options.trace_path) {
      write_trace_csv_file(*options.trace_path, report);
    }
    if (!options.quiet) {
      std::cout << format_report_table(report);
    }
    if (failed == report.cells.size()) {
      std::cerr << "error: every cell failed\n";
      return exit_degenerate;
    }
    return exit_ok;
  });
}

int run_coverage(const CoverageOptions& options) {
  return guarded([&] {
    FrontierModel model;
    model.frontier = parse_frontier_kind(options.frontier);
    model.covariate = parse_covariate_law(options.covariate);
    model.gamma = 1.0;  // the band's normal approximation is derived for this law
    model.seed = options.seed;

    const auto points =
        coverage_study(model, options.n, options.level, options.m, options.points);
    with_output(options.output_path,
                [&](std::ostream& out) { write_coverage_csv(out, points); });
    return exit_ok;
  });
}

}  // namespace frontier::cli
