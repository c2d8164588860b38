#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frontier {

// Raised when a computation degenerates numerically rather than being
// misused: zero-variance bandwidth rule, zero kernel mass where a positive
// density is required, an evaluation grid with no defined points.
class DegenerateError : public std::runtime_error {
 public:
  explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

// CSV / text-input failure carrying the 1-based line number.
class CsvError : public std::runtime_error {
 public:
  CsvError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace frontier
