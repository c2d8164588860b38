// Synthetic data generation: two reference frontier curves on [0,1],
// uniform and Beta(2,2) covariate laws, and the conditional response law
// P(Y > y | X = x) = (1 - y/g(x))^gamma with tail exponent gamma > 0.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frontier/estimators.hpp"

namespace frontier {

enum class FrontierKind { G1, G2, UserGrid };
enum class CovariateLaw { Uniform01, Beta22 };

/// Accepts "g1" or "g2".
FrontierKind parse_frontier_kind(std::string_view name);
std::string frontier_kind_name(FrontierKind kind);

/// Accepts "uniform" or "beta22".
CovariateLaw parse_covariate_law(std::string_view name);
std::string covariate_law_name(CovariateLaw law);

/// First reference frontier: piecewise curve on [0,1], continuous but not
/// differentiable at 1/3, 2/3 and 5/6. Outside [0,1] is a domain error.
double frontier_g1(double x);

/// Second reference frontier: smooth, strictly positive product of a sine
/// arch and an inverted Gaussian dip on [0,1].
double frontier_g2(double x);

// Deterministic uniform stream: std::mt19937_64 with the top 53 bits of
// each output mapped to [0,1). The engine's raw sequence is pinned by the
// standard, so a seed reproduces the same stream on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

/// Replication r of a run seeded with base_seed draws from base_seed XOR r.
inline std::uint64_t replication_seed(std::uint64_t base_seed, std::uint64_t r) {
  return base_seed ^ r;
}

// The data-generating process: frontier curve, response tail exponent,
// covariate law and base seed.
struct FrontierModel {
  FrontierKind frontier = FrontierKind::G1;
  double gamma = 1.0;
  CovariateLaw covariate = CovariateLaw::Uniform01;
  std::uint64_t seed = 0;
  // UserGrid only: (x, g(x)) knots sorted by strictly increasing x.
  // Evaluation interpolates linearly and clamps outside the knot range.
  std::vector<std::pair<double, double>> knots;

  double frontier_value(double x) const;
  void validate() const;
};

/// Median of three independent uniforms: an exact Beta(2,2) draw.
double beta22_from_uniforms(double u1, double u2, double u3);

/// Inverse-survival transform of the response law: g * (1 - v^{1/gamma})
/// for v in [0,1]. gamma = 1 gives g * (1 - v), uniform on [0, g].
double response_from_uniform(double frontier_value, double gamma, double v);

/// One covariate draw: Uniform01 consumes one uniform, Beta22 three.
double sample_covariate(const FrontierModel& model, Rng& rng);

/// One response draw at covariate x, always inside [0, g(x)].
double sample_response(const FrontierModel& model, double x, Rng& rng);

/// n i.i.d. pairs from the model's seed. Identical (model, n) arguments
/// reproduce the identical sample. n = 0 is a domain error.
Sample generate_sample(const FrontierModel& model, std::size_t n);

}  // namespace frontier
