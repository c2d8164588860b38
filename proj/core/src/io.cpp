#include "frontier/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace frontier {

namespace {

std::string trimmed(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  const std::string t = trimmed(text);
  double value = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last || t.empty()) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return value;
}

Sample read_sample_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    throw CsvError("missing 'x,y' header", 1);
  }
  ++line_no;
  if (trimmed(line) != "x,y") {
    throw CsvError("expected header 'x,y', got '" + trimmed(line) + "'", line_no);
  }

  Sample sample(1);
  while (std::getline(in, line)) {
    ++line_no;
    const std::string row = trimmed(line);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    if (comma == std::string::npos || row.find(',', comma + 1) != std::string::npos) {
      throw CsvError("expected exactly two comma-separated fields", line_no);
    }
    double x, y;
    try {
      x = parse_double(row.substr(0, comma));
      y = parse_double(row.substr(comma + 1));
    } catch (const std::invalid_argument& e) {
      throw CsvError(e.what(), line_no);
    }
    try {
      sample.add(x, y);
    } catch (const std::domain_error& e) {
      throw CsvError(e.what(), line_no);
    }
  }
  return sample;
}

Sample read_sample_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "' for reading");
  }
  return read_sample_csv(in);
}

void write_sample_csv(std::ostream& out, const Sample& sample) {
  out << "x,y\n";
  for (std::size_t i = 0; i < sample.size(); ++i) {
    out << format_double(sample.x(i)[0]) << ',' << format_double(sample.y(i))
        << '\n';
  }
}

void write_sample_csv_file(const std::string& path, const Sample& sample) {
  auto out = open_output(path);
  write_sample_csv(out, sample);
}

void write_estimate_csv(std::ostream& out, const std::vector<EstimateRow>& rows,
                        bool with_ci) {
  out << (with_ci ? "x,ghat,defined,ci_lo,ci_hi" : "x,ghat,defined") << '\n';
  for (const EstimateRow& row : rows) {
    out << format_double(row.x) << ',' << format_double(row.estimate.value)
        << ',' << (row.estimate.defined ? '1' : '0');
    if (with_ci) {
      if (row.band) {
        out << ',' << format_double(row.band->lower()) << ','
            << format_double(row.band->upper());
      } else {
        out << ",nan,nan";
      }
    }
    out << '\n';
  }
}

std::string report_to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "estimator,n,gamma,mean_l1,min_l1,max_l1,undefined_fraction\n";
  for (const CellRow& row : report.cells) {
    if (!row.ok) continue;
    out << estimator_name(row.estimator) << ',' << row.n << ','
        << format_double(row.gamma) << ',' << format_double(row.stats.mean_l1)
        << ',' << format_double(row.stats.min_l1) << ','
        << format_double(row.stats.max_l1) << ','
        << format_double(row.stats.undefined_fraction) << '\n';
  }
  return out.str();
}

void write_report_csv_file(const std::string& path, const ExperimentReport& report) {
  auto out = open_output(path);
  out << report_to_csv(report);
}

std::string trace_to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "estimator,n,gamma,rep,l1\n";
  for (const CellRow& row : report.cells) {
    if (!row.ok) continue;
    for (std::size_t r = 0; r < row.stats.replication_l1.size(); ++r) {
      out << estimator_name(row.estimator) << ',' << row.n << ','
          << format_double(row.gamma) << ',' << (r + 1) << ','
          << format_double(row.stats.replication_l1[r]) << '\n';
    }
  }
  return out.str();
}

void write_trace_csv_file(const std::string& path, const ExperimentReport& report) {
  auto out = open_output(path);
  out << trace_to_csv(report);
}

void write_coverage_csv(std::ostream& out, const std::vector<CoveragePoint>& points) {
  out << "x,coverage,bands_defined,replications\n";
  for (const CoveragePoint& p : points) {
    out << format_double(p.x) << ',' << format_double(p.coverage) << ','
        << p.bands_defined << ',' << p.replications << '\n';
  }
}

}  // namespace frontier
