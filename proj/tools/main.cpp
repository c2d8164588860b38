#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace frontier::cli;

  CLI::App app{
      "frontier: estimate the upper boundary of (x,y) samples by kernel "
      "regression on power-transformed responses"};
  app.require_subcommand(1);
  // --h is the bandwidth flag, so help stays on --help alone.
  app.set_help_flag("--help", "Print help and exit");

  EstimateOptions estimate;
  CLI::App* est = app.add_subcommand(
      "estimate", "Estimate the frontier from a CSV of x,y pairs");
  est->set_help_flag("--help", "Print help and exit");
  est->add_option("input", estimate.input_path, "Input CSV path ('-' for stdin)")
      ->required();
  est->add_option("--out", estimate.output_path, "Output CSV path ('-' for stdout)");
  est->add_option("--p", estimate.p, "Power exponent (default: sqrt(n) rule)");
  est->add_option("--h", estimate.h,
                  "Bandwidth (default: 4*stddev(x)/sqrt(n) rule)");
  est->add_option("--kernel", estimate.kernel,
                  "Kernel family: cosine2|epanechnikov|uniform");
  est->add_option("--gamma", estimate.gamma,
                  "Known response tail index; applies the bias-corrected estimate");
  est->add_option("--grid", estimate.grid, "Number of evaluation grid points");
  est->add_option("--ci", estimate.ci_level,
                  "Confidence level in (0,1); adds ci_lo,ci_hi columns");
  est->add_option("--xmin", estimate.xmin, "Grid lower end (default: min x)");
  est->add_option("--xmax", estimate.xmax, "Grid upper end (default: max x)");

  SimulateOptions simulate;
  CLI::App* sim = app.add_subcommand(
      "simulate", "Draw a synthetic sample below a reference frontier");
  sim->add_option("--frontier", simulate.frontier, "Frontier curve: g1|g2");
  sim->add_option("--covariate", simulate.covariate, "Covariate law: uniform|beta22");
  sim->add_option("--gamma", simulate.gamma, "Response tail index (> 0)");
  sim->add_option("--n", simulate.n, "Number of pairs")->required();
  sim->add_option("--seed", simulate.seed, "RNG seed");
  sim->add_option("--out", simulate.output_path, "Output CSV path ('-' for stdout)");

  ExperimentOptions experiment;
  CLI::App* exp = app.add_subcommand(
      "experiment",
      "Replicated L1-error comparison of the estimators over (n, gamma) cells");
  exp->add_option("--config", experiment.config_path,
                  "key=value config file (defaults match the built-in design)");
  exp->add_option("--m", experiment.m, "Replications per cell");
  exp->add_option("--seed", experiment.seed, "Base seed");
  exp->add_option("--out", experiment.output_path, "Report CSV path ('-' for stdout)");
  exp->add_option("--trace", experiment.trace_path, "Per-replication trace CSV path");
  exp->add_flag("--quiet", experiment.quiet, "Suppress the stdout summary table");

  CoverageOptions coverage;
  CLI::App* cov = app.add_subcommand(
      "coverage",
      "Empirical coverage of the pointwise confidence bands (uniform response law)");
  cov->add_option("--frontier", coverage.frontier, "Frontier curve: g1|g2");
  cov->add_option("--covariate", coverage.covariate, "Covariate law: uniform|beta22");
  cov->add_option("--n", coverage.n, "Sample size per replication");
  cov->add_option("--level", coverage.level, "Confidence level in (0,1)");
  cov->add_option("--m", coverage.m, "Number of replications");
  cov->add_option("--points", coverage.points, "Evaluation points")
      ->delimiter(',');
  cov->add_option("--seed", coverage.seed, "Base seed");
  cov->add_option("--out", coverage.output_path, "Output CSV path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  if (est->parsed()) return run_estimate(estimate);
  if (sim->parsed()) return run_simulate(simulate);
  if (exp->parsed()) return run_experiment_cmd(experiment);
  if (cov->parsed()) return run_coverage(coverage);
  return exit_usage;
}
