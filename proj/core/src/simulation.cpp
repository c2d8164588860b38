#include "frontier/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace frontier {

FrontierKind parse_frontier_kind(std::string_view name) {
  if (name == "g1") return FrontierKind::G1;
  if (name == "g2") return FrontierKind::G2;
  throw std::invalid_argument("unknown frontier '" + std::string(name) +
                              "' (expected g1 or g2)");
}

std::string frontier_kind_name(FrontierKind kind) {
  switch (kind) {
    case FrontierKind::G1:
      return "g1";
    case FrontierKind::G2:
      return "g2";
    case FrontierKind::UserGrid:
      return "user_grid";
  }
  return "?";
}

CovariateLaw parse_covariate_law(std::string_view name) {
  if (name == "uniform") return CovariateLaw::Uniform01;
  if (name == "beta22") return CovariateLaw::Beta22;
  throw std::invalid_argument("unknown covariate law '" + std::string(name) +
                              "' (expected uniform or beta22)");
}

std::string covariate_law_name(CovariateLaw law) {
  switch (law) {
    case CovariateLaw::Uniform01:
      return "uniform";
    case CovariateLaw::Beta22:
      return "beta22";
  }
  return "?";
}

namespace {

void require_unit_interval(double x, const char* who) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(who) + ": x must lie in [0,1]");
  }
}

}  // namespace

double frontier_g1(double x) {
  require_unit_interval(x, "frontier_g1");
  static const double e512 = std::exp(-5.0 / 12.0);
  if (x <= 1.0 / 3.0) {
    const double d = x - 0.25;
    return 1.0 + std::exp(-60.0 * d * d);
  }
  if (x <= 2.0 / 3.0) {
    return 1.0 + e512;
  }
  if (x <= 5.0 / 6.0) {
    return 1.0 + 5.0 * e512 - 6.0 * e512 * x;
  }
  return 6.0 * x - 4.0;
}

double frontier_g2(double x) {
  require_unit_interval(x, "frontier_g2");
  const double d = x - 0.5;
  return (0.1 + std::sin(std::numbers::pi * x)) *
         (1.1 - 0.5 * std::exp(-64.0 * d * d));
}

double FrontierModel::frontier_value(double x) const {
  switch (frontier) {
    case FrontierKind::G1:
      return frontier_g1(x);
    case FrontierKind::G2:
      return frontier_g2(x);
    case FrontierKind::UserGrid: {
      if (knots.empty()) {
        throw std::domain_error("FrontierModel: user grid has no knots");
      }
      if (x <= knots.front().first) return knots.front().second;
      if (x >= knots.back().first) return knots.back().second;
      auto hi = std::upper_bound(
          knots.begin(), knots.end(), x,
          [](double v, const std::pair<double, double>& k) { return v < k.first; });
      auto lo = hi - 1;
      const double t = (x - lo->first) / (hi->first - lo->first);
      return lo->second + t * (hi->second - lo->second);
    }
  }
  throw std::logic_error("FrontierModel: unknown frontier kind");
}

void FrontierModel::validate() const {
  if (!(gamma > 0.0)) {
    throw std::domain_error("FrontierModel: gamma must be positive");
  }
  if (frontier == FrontierKind::UserGrid) {
    if (knots.empty()) {
      throw std::domain_error("FrontierModel: user grid needs at least one knot");
    }
    for (std::size_t i = 0; i < knots.size(); ++i) {
      if (!(knots[i].second > 0.0)) {
        throw std::domain_error("FrontierModel: frontier knots must be positive");
      }
      if (i > 0 && !(knots[i].first > knots[i - 1].first)) {
        throw std::domain_error("FrontierModel: knots must be sorted by increasing x");
      }
    }
  }
}

double beta22_from_uniforms(double u1, double u2, double u3) {
  return std::max(std::min(u1, u2), std::min(std::max(u1, u2), u3));
}

double response_from_uniform(double frontier_value, double gamma, double v) {
  return frontier_value * (1.0 - std::pow(v, 1.0 / gamma));
}

double sample_covariate(const FrontierModel& model, Rng& rng) {
  switch (model.covariate) {
    case CovariateLaw::Uniform01:
      return rng.uniform();
    case CovariateLaw::Beta22: {
      // Draw order is part of the reproducibility contract.
      const double u1 = rng.uniform();
      const double u2 = rng.uniform();
      const double u3 = rng.uniform();
      return beta22_from_uniforms(u1, u2, u3);
    }
  }
  throw std::logic_error("sample_covariate: unknown covariate law");
}

double sample_response(const FrontierModel& model, double x, Rng& rng) {
  return response_from_uniform(model.frontier_value(x), model.gamma, rng.uniform());
}

Sample generate_sample(const FrontierModel& model, std::size_t n) {
  if (n == 0) {
    throw std::domain_error("generate_sample: n must be >= 1");
  }
  model.validate();
  Rng rng(model.seed);
  Sample sample(1);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = sample_covariate(model, rng);
    const double y = sample_response(model, x, rng);
    sample.add(x, y);
  }
  return sample;
}

}  // namespace frontier
