// CSV input/output. All numbers use shortest round-trip formatting via
// std::to_chars, so output never depends on the process locale and parsing
// a written file reproduces the exact doubles.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frontier/errors.hpp"
#include "frontier/estimators.hpp"
#include "frontier/experiment.hpp"

namespace frontier {

/// Shortest round-trip decimal form of v ("nan"/"inf" for specials).
std::string format_double(double v);

/// Strict full-string parse; throws std::invalid_argument on leftovers.
double parse_double(const std::string& text);

/// Reads a sample from CSV with header "x,y". Malformed rows raise
/// CsvError carrying the offending line number. A header-only file yields
/// an empty sample.
Sample read_sample_csv(std::istream& in);
Sample read_sample_csv_file(const std::string& path);

void write_sample_csv(std::ostream& out, const Sample& sample);
void write_sample_csv_file(const std::string& path, const Sample& sample);

// One evaluated grid point of the estimate subcommand.
struct EstimateRow {
  double x = 0.0;
  PointEstimate estimate;
  std::optional<ConfidenceBand> band;
};

/// Header "x,ghat,defined" plus ",ci_lo,ci_hi" when with_ci. Undefined
/// points write ghat (and band endpoints) as nan.
void write_estimate_csv(std::ostream& out, const std::vector<EstimateRow>& rows,
                        bool with_ci);

/// Header "estimator,n,gamma,mean_l1,min_l1,max_l1,undefined_fraction";
/// one row per successful cell, in report order.
std::string report_to_csv(const ExperimentReport& report);
void write_report_csv_file(const std::string& path, const ExperimentReport& report);

/// Header "estimator,n,gamma,rep,l1"; one row per replication.
std::string trace_to_csv(const ExperimentReport& report);
void write_trace_csv_file(const std::string& path, const ExperimentReport& report);

/// Header "x,coverage,bands_defined,replications".
void write_coverage_csv(std::ostream& out, const std::vector<CoveragePoint>& points);

}  // namespace frontier
