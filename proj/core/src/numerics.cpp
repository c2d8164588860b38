#include "frontier/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace frontier {

namespace {

// Slack for the inequality checks: both sides can be ~1e-16 apart after
// rounding even though the mathematical inequality is strict.
constexpr double kCheckTol = 1e-12;

}  // namespace

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("log_beta: arguments must be positive");
  }
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double log_sum_exp(std::span<const double> terms) {
  if (terms.empty()) return log_zero;
  const double shift = *std::max_element(terms.begin(), terms.end());
  if (shift == log_zero) return log_zero;
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - shift);
  return shift + std::log(sum);
}

void LogWeightedPowerSum::add(double log_term) {
  log_terms_.push_back(log_term);
  shift_ = std::max(shift_, log_term);
}

double LogWeightedPowerSum::log_sum() const {
  if (log_terms_.empty() || shift_ == log_zero) return log_zero;
  double sum = 0.0;
  for (double t : log_terms_) sum += std::exp(t - shift_);
  return shift_ + std::log(sum);
}

bool check_power_inequality_i(double u, double p) {
  if (!(p >= 1.0)) {
    throw std::domain_error("check_power_inequality_i: p must be >= 1");
  }
  if (!(p * std::abs(u) <= std::numbers::ln2)) {
    throw std::domain_error("check_power_inequality_i: requires p*|u| <= ln 2");
  }
  // expm1(p*log1p(u)) = (1+u)^p - 1 without cancellation for small u.
  const double lhs = std::abs(std::expm1(p * std::log1p(u)));
  return lhs <= 2.0 * p * std::abs(u) + kCheckTol;
}

bool check_root_inequality_ii(double u, double p, double c) {
  if (!(p >= 1.0)) {
    throw std::domain_error("check_root_inequality_ii: p must be >= 1");
  }
  if (!(c >= 2.0)) {
    throw std::domain_error("check_root_inequality_ii: c must be >= 2");
  }
  if (!(std::abs(u) < 0.5)) {
    throw std::domain_error("check_root_inequality_ii: requires |u| < 1/2");
  }
  const double lhs = std::abs(std::expm1(std::log1p(u) / p) - u / p);
  return lhs <= (c / p) * u * u + kCheckTol;
}

double sample_stddev(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) {
    throw std::domain_error("sample_stddev: need at least two values");
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : values) {
    const double d = v - mean;
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(n - 1));
}

double normal_quantile(double prob) {
  if (!(prob > 0.0 && prob < 1.0)) {
    throw std::domain_error("normal_quantile: prob must lie in (0,1)");
  }

  // Acklam's rational approximation, then one Halley step against erfc.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (prob < p_low) {
    const double q = std::sqrt(-2.0 * std::log(prob));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (prob <= 1.0 - p_low) {
    const double q = prob - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - prob));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - prob;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

}  // namespace frontier
