// Shared numerical primitives: log-domain accumulation, the log-beta
// function, power/root inequality checks and basic sample statistics.
#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace frontier {

// Distinguished "log of zero" sentinel for empty sums and vanishing terms in
// log-domain arithmetic. Compared and propagated explicitly throughout.
inline constexpr double log_zero = -std::numeric_limits<double>::infinity();

/// log B(a,b) through the log-gamma identity
/// log B = lgamma(a) + lgamma(b) - lgamma(a+b); a, b must be positive.
double log_beta(double a, double b);

/// log(sum_i exp(terms[i])) with max-shift stabilization.
/// An empty list yields log_zero.
double log_sum_exp(std::span<const double> terms);

// Accumulator for sums of the form sum_i w_i * y_i^p kept as log-terms
// p*log(y_i) + log(w_i). The shift tracks the maximum log-term, so every
// exponentiated difference exp(term - shift) lies in [0, 1].
class LogWeightedPowerSum {
 public:
  void add(double log_term);

  /// log of the accumulated sum; log_zero when empty or all-zero.
  double log_sum() const;

  double shift() const { return shift_; }
  std::span<const double> log_terms() const { return log_terms_; }
  std::size_t size() const { return log_terms_.size(); }
  bool empty() const { return log_terms_.empty(); }

 private:
  std::vector<double> log_terms_;
  double shift_ = log_zero;
};

/// Checks |(1+u)^p - 1| <= 2p|u|, valid whenever p >= 1 and p|u| <= ln 2.
/// Arguments outside that region raise std::domain_error.
bool check_power_inequality_i(double u, double p);

/// Checks |(1+u)^{1/p} - 1 - u/p| <= (c/p) u^2, valid whenever p >= 1,
/// c >= 2 and |u| < 1/2. Arguments outside that region raise
/// std::domain_error.
bool check_root_inequality_ii(double u, double p, double c);

/// Square root of the unbiased sample variance (divisor n-1).
/// Needs at least two values.
double sample_stddev(std::span<const double> values);

/// Quantile of the standard normal distribution, prob in (0,1).
double normal_quantile(double prob);

}  // namespace frontier
