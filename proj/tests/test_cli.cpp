#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "frontier/io.hpp"
#include "frontier/simulation.hpp"

using namespace frontier;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("frontier_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

int run_binary(const std::string& args) {
#ifdef FRONTIER_CLI_BINARY
  const std::string cmd = std::string(FRONTIER_CLI_BINARY) + " " + args;
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
  (void)args;
  return -1;
#endif
}

}  // namespace

TEST_CASE("simulate writes a deterministic, in-support sample") {
  TempDir dir;
  cli::SimulateOptions opts;
  opts.frontier = "g2";
  opts.covariate = "beta22";
  opts.gamma = 2.0;
  opts.n = 50;
  opts.seed = 11;
  opts.output_path = dir.file("a.csv");
  REQUIRE(cli::run_simulate(opts) == cli::exit_ok);

  const Sample s = read_sample_csv_file(opts.output_path);
  REQUIRE(s.size() == 50);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s.y(i) <= frontier_g2(s.x(i)[0]));
  }

  opts.output_path = dir.file("b.csv");
  REQUIRE(cli::run_simulate(opts) == cli::exit_ok);
  CHECK(slurp(dir.file("a.csv")) == slurp(dir.file("b.csv")));  // byte-identical
}

TEST_CASE("simulate rejects bad flags") {
  TempDir dir;
  cli::SimulateOptions opts;
  opts.n = 10;
  opts.output_path = dir.file("x.csv");

  opts.frontier = "g7";
  CHECK(cli::run_simulate(opts) == cli::exit_usage);
  opts.frontier = "g1";
  opts.covariate = "cauchy";
  CHECK(cli::run_simulate(opts) == cli::exit_usage);
  opts.covariate = "uniform";
  opts.gamma = -1.0;
  CHECK(cli::run_simulate(opts) == cli::exit_usage);
  opts.gamma = 1.0;
  opts.n = 0;
  CHECK(cli::run_simulate(opts) == cli::exit_usage);
}

TEST_CASE("estimate on a coincident-x fixture matches the closed form") {
  TempDir dir;
  spit(dir.file("in.csv"), "x,y\n0.5,0.2\n0.5,0.4\n0.5,0.6\n");

  cli::EstimateOptions opts;
  opts.input_path = dir.file("in.csv");
  opts.output_path = dir.file("out.csv");
  opts.p = 1.0;
  opts.h = 1.0;
  REQUIRE(cli::run_estimate(opts) == cli::exit_ok);

  // All x coincide, so the grid is the single point 0.5 and the estimate
  // with p = 1 is twice the mean response.
  const std::string text = slurp(dir.file("out.csv"));
  std::istringstream in(text);
  std::string header, row;
  std::getline(in, header);
  CHECK(header == "x,ghat,defined");
  REQUIRE(std::getline(in, row));
  CHECK(row.substr(0, 4) == "0.5,");
  const auto second_comma = row.find(',', 4);
  const double ghat = parse_double(row.substr(4, second_comma - 4));
  CHECK(ghat == doctest::Approx(0.8).epsilon(1e-12));
  CHECK_FALSE(std::getline(in, row));
}

TEST_CASE("gamma = 1 correction leaves the output bytes unchanged") {
  TempDir dir;
  cli::SimulateOptions sim;
  sim.frontier = "g2";
  sim.covariate = "uniform";
  sim.n = 120;
  sim.seed = 3;
  sim.output_path = dir.file("data.csv");
  REQUIRE(cli::run_simulate(sim) == cli::exit_ok);

  cli::EstimateOptions est;
  est.input_path = dir.file("data.csv");
  est.output_path = dir.file("plain.csv");
  est.grid = 33;
  REQUIRE(cli::run_estimate(est) == cli::exit_ok);

  est.gamma = 1.0;
  est.output_path = dir.file("corrected.csv");
  REQUIRE(cli::run_estimate(est) == cli::exit_ok);
  CHECK(slurp(dir.file("plain.csv")) == slurp(dir.file("corrected.csv")));
}

TEST_CASE("estimate accepts simulate output unchanged and honors --ci") {
  TempDir dir;
  cli::SimulateOptions sim;
  sim.frontier = "g1";
  sim.covariate = "beta22";
  sim.gamma = 1.0;
  sim.n = 300;
  sim.seed = 8;
  sim.output_path = dir.file("data.csv");
  REQUIRE(cli::run_simulate(sim) == cli::exit_ok);

  cli::EstimateOptions est;
  est.input_path = dir.file("data.csv");
  est.output_path = dir.file("bands.csv");
  est.ci_level = 0.9;
  est.grid = 21;
  REQUIRE(cli::run_estimate(est) == cli::exit_ok);

  std::istringstream in(slurp(dir.file("bands.csv")));
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,ghat,defined,ci_lo,ci_hi");
  std::size_t rows = 0;
  for (std::string row; std::getline(in, row);) ++rows;
  CHECK(rows == 21);
}

TEST_CASE("estimate exit codes") {
  TempDir dir;
  cli::EstimateOptions opts;
  opts.output_path = dir.file("out.csv");

  // Empty data.
  spit(dir.file("empty.csv"), "x,y\n");
  opts.input_path = dir.file("empty.csv");
  CHECK(cli::run_estimate(opts) == cli::exit_data);

  // Malformed rows.
  spit(dir.file("bad.csv"), "x,y\n0.5,oops\n");
  opts.input_path = dir.file("bad.csv");
  CHECK(cli::run_estimate(opts) == cli::exit_data);

  // Missing file.
  opts.input_path = dir.file("nope.csv");
  CHECK(cli::run_estimate(opts) == cli::exit_data);

  spit(dir.file("ok.csv"), "x,y\n0.2,1\n0.8,2\n");
  opts.input_path = dir.file("ok.csv");

  // Unknown kernel and invalid parameters are usage errors.
  opts.kernel = "box";
  CHECK(cli::run_estimate(opts) == cli::exit_usage);
  opts.kernel = "cosine2";
  opts.p = 0.25;
  CHECK(cli::run_estimate(opts) == cli::exit_usage);
  opts.p.reset();
  opts.ci_level = 1.5;
  CHECK(cli::run_estimate(opts) == cli::exit_usage);
  opts.ci_level.reset();

  // Zero-variance covariate cannot feed the bandwidth rule.
  spit(dir.file("flat.csv"), "x,y\n0.5,1\n0.5,2\n");
  opts.input_path = dir.file("flat.csv");
  CHECK(cli::run_estimate(opts) == cli::exit_degenerate);

  // A grid placed away from every observation has no defined point.
  opts.input_path = dir.file("ok.csv");
  opts.h = 0.01;
  opts.xmin = 0.4;
  opts.xmax = 0.6;
  CHECK(cli::run_estimate(opts) == cli::exit_degenerate);
}

TEST_CASE("experiment subcommand writes report and trace") {
  TempDir dir;
  spit(dir.file("cfg.txt"),
       "# tiny design\n"
       "n_values = 60, 90\n"
       "gamma_values = 1\n"
       "covariate = beta22\n"
       "frontier = g2\n"
       "m = 2\n"
       "grid_size = 31\n"
       "estimators = power_kernel, geffroy\n"
       "seed = 5\n");

  cli::ExperimentOptions opts;
  opts.config_path = dir.file("cfg.txt");
  opts.output_path = dir.file("report.csv");
  opts.trace_path = dir.file("trace.csv");
  opts.quiet = true;
  REQUIRE(cli::run_experiment_cmd(opts) == cli::exit_ok);

  std::istringstream report(slurp(dir.file("report.csv")));
  std::string line;
  std::getline(report, line);
  CHECK(line == "estimator,n,gamma,mean_l1,min_l1,max_l1,undefined_fraction");
  std::size_t rows = 0;
  while (std::getline(report, line)) ++rows;
  CHECK(rows == 4);  // 2 estimators x 2 sizes x 1 gamma

  std::istringstream trace(slurp(dir.file("trace.csv")));
  std::getline(trace, line);
  CHECK(line == "estimator,n,gamma,rep,l1");
  rows = 0;
  while (std::getline(trace, line)) ++rows;
  CHECK(rows == 8);  // m = 2 per cell

  // Same config, same bytes.
  opts.output_path = dir.file("report2.csv");
  REQUIRE(cli::run_experiment_cmd(opts) == cli::exit_ok);
  CHECK(slurp(dir.file("report.csv")) == slurp(dir.file("report2.csv")));

  // The --m override extends the trace.
  opts.m = 3;
  opts.output_path = dir.file("report3.csv");
  opts.trace_path = dir.file("trace3.csv");
  REQUIRE(cli::run_experiment_cmd(opts) == cli::exit_ok);
  std::istringstream trace3(slurp(dir.file("trace3.csv")));
  std::getline(trace3, line);
  rows = 0;
  while (std::getline(trace3, line)) ++rows;
  CHECK(rows == 12);
}

TEST_CASE("experiment config errors are usage errors") {
  TempDir dir;
  cli::ExperimentOptions opts;
  opts.quiet = true;
  opts.output_path = dir.file("r.csv");

  spit(dir.file("bad1.txt"), "n_values = 60\nwindow = 3\n");
  opts.config_path = dir.file("bad1.txt");
  CHECK(cli::run_experiment_cmd(opts) == cli::exit_usage);

  spit(dir.file("bad2.txt"), "m 100\n");
  opts.config_path = dir.file("bad2.txt");
  CHECK(cli::run_experiment_cmd(opts) == cli::exit_usage);

  spit(dir.file("bad3.txt"), "estimators = power_kernel, dea\n");
  opts.config_path = dir.file("bad3.txt");
  CHECK(cli::run_experiment_cmd(opts) == cli::exit_usage);

  opts.config_path = dir.file("missing.txt");
  CHECK(cli::run_experiment_cmd(opts) == cli::exit_usage);
}

TEST_CASE("config parser round-trips a full design") {
  std::istringstream in(
      "n_values=200,300\n"
      "gamma_values=1,2.5\n"
      "covariate=uniform\n"
      "frontier=g1\n"
      "m=7\n"
      "grid_size=101\n"
      "estimators=corrected_gamma\n"
      "seed=99\n");
  const ExperimentConfig config = cli::parse_experiment_config(in);
  CHECK(config.n_values == std::vector<std::size_t>{200, 300});
  CHECK(config.gamma_values == std::vector<double>{1.0, 2.5});
  CHECK(config.covariate == CovariateLaw::Uniform01);
  CHECK(config.frontier == FrontierKind::G1);
  CHECK(config.m == 7);
  CHECK(config.grid_size == 101);
  REQUIRE(config.estimators.size() == 1);
  CHECK(config.estimators[0] == EstimatorKind::CorrectedGamma);
  CHECK(config.base_seed == 99);
}

TEST_CASE("report table lists every design point") {
  ExperimentConfig config;
  config.n_values = {60};
  config.gamma_values = {1.0, 2.0};
  config.m = 2;
  config.grid_size = 21;
  config.estimators = {EstimatorKind::PowerKernel};
  config.base_seed = 3;
  const std::string table = cli::format_report_table(run_experiment(config));
  CHECK(table.find("gamma = 1") != std::string::npos);
  CHECK(table.find("gamma = 2") != std::string::npos);
  CHECK(table.find("power_kernel") != std::string::npos);
  CHECK(table.find("60") != std::string::npos);
}

TEST_CASE("coverage subcommand writes one row per point") {
  TempDir dir;
  cli::CoverageOptions opts;
  opts.n = 150;
  opts.m = 15;
  opts.level = 0.9;
  opts.points = {0.4, 0.6};
  opts.seed = 17;
  opts.output_path = dir.file("cov.csv");
  REQUIRE(cli::run_coverage(opts) == cli::exit_ok);

  std::istringstream in(slurp(dir.file("cov.csv")));
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,coverage,bands_defined,replications");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const double coverage = parse_double(line.substr(c1 + 1, c2 - c1 - 1));
    CHECK(coverage >= 0.0);
    CHECK(coverage <= 1.0);
    ++rows;
  }
  CHECK(rows == 2);

  opts.level = 1.2;
  CHECK(cli::run_coverage(opts) == cli::exit_usage);
}

TEST_CASE("installed binary honors the exit-code contract") {
  if (run_binary("--help > /dev/null 2>&1") == -1) return;  // no binary path
  CHECK(run_binary("--help > /dev/null 2>&1") == 0);
  CHECK(run_binary("estimate --help > /dev/null 2>&1") == 0);
  CHECK(run_binary("frobnicate > /dev/null 2>&1") == cli::exit_usage);
  CHECK(run_binary("estimate > /dev/null 2>&1") == cli::exit_usage);

  TempDir dir;
  const std::string out = dir.file("s.csv");
  CHECK(run_binary("simulate --n 5 --seed 1 --out " + out + " 2> /dev/null") == 0);
  const Sample s = read_sample_csv_file(out);
  CHECK(s.size() == 5);
}
