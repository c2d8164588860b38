#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "frontier/simulation.hpp"
#include "support/oracles.hpp"

using namespace frontier;

TEST_CASE("first frontier: branch values") {
  CHECK(frontier_g1(0.25) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(frontier_g1(0.5) ==
        doctest::Approx(1.0 + std::exp(-5.0 / 12.0)).epsilon(1e-15));
  CHECK(frontier_g1(0.5) == doctest::Approx(1.65924).epsilon(1e-5));
  CHECK(frontier_g1(1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(frontier_g1(0.0) ==
        doctest::Approx(1.0 + std::exp(-60.0 * 0.0625)).epsilon(1e-14));

  CHECK_THROWS_AS(frontier_g1(-0.01), std::domain_error);
  CHECK_THROWS_AS(frontier_g1(1.01), std::domain_error);
}

TEST_CASE("first frontier is continuous across its breakpoints") {
  for (double b : {1.0 / 3.0, 2.0 / 3.0, 5.0 / 6.0}) {
    const double left = frontier_g1(std::nextafter(b, 0.0));
    const double right = frontier_g1(std::nextafter(b, 1.0));
    CHECK(std::abs(left - right) <= 1e-12);
  }
}

TEST_CASE("second frontier: values, symmetry, positivity") {
  CHECK(frontier_g2(0.5) == doctest::Approx(0.66).epsilon(1e-12));
  CHECK(frontier_g2(0.0) ==
        doctest::Approx(0.1 * (1.1 - 0.5 * std::exp(-16.0))).epsilon(1e-14));
  CHECK(frontier_g2(0.0) == doctest::Approx(0.11).epsilon(1e-5));
  CHECK(frontier_g2(1.0) == doctest::Approx(frontier_g2(0.0)).epsilon(1e-12));

  for (int i = 0; i <= 10000; ++i) {
    const double x = static_cast<double>(i) / 10000.0;
    CHECK(frontier_g2(x) > 0.0);
  }
  CHECK_THROWS_AS(frontier_g2(-0.2), std::domain_error);
  CHECK_THROWS_AS(frontier_g2(2.0), std::domain_error);
}

TEST_CASE("beta22_from_uniforms takes the median, whatever the order") {
  CHECK(beta22_from_uniforms(0.1, 0.9, 0.4) == 0.4);
  CHECK(beta22_from_uniforms(0.1, 0.4, 0.9) == 0.4);
  CHECK(beta22_from_uniforms(0.4, 0.1, 0.9) == 0.4);
  CHECK(beta22_from_uniforms(0.4, 0.9, 0.1) == 0.4);
  CHECK(beta22_from_uniforms(0.9, 0.1, 0.4) == 0.4);
  CHECK(beta22_from_uniforms(0.9, 0.4, 0.1) == 0.4);
}

TEST_CASE("response transform endpoints") {
  CHECK(response_from_uniform(1.7, 3.0, 1.0) == 0.0);
  CHECK(response_from_uniform(1.7, 3.0, 0.0) == 1.7);
  // gamma = 1 is the uniform law on [0, g].
  for (double v : {0.0, 0.1, 0.5, 0.93, 1.0}) {
    CHECK(response_from_uniform(2.0, 1.0, v) ==
          doctest::Approx(2.0 * (1.0 - v)).epsilon(1e-15));
  }
}

TEST_CASE("covariate sampling consumes a documented number of draws") {
  FrontierModel uniform_model;
  uniform_model.covariate = CovariateLaw::Uniform01;
  Rng a(123);
  Rng ref(123);
  CHECK(sample_covariate(uniform_model, a) == ref.uniform());

  FrontierModel beta_model;
  beta_model.covariate = CovariateLaw::Beta22;
  Rng b(456);
  Rng ref3(456);
  const double u1 = ref3.uniform();
  const double u2 = ref3.uniform();
  const double u3 = ref3.uniform();
  CHECK(sample_covariate(beta_model, b) == beta22_from_uniforms(u1, u2, u3));
  // Exactly three draws were consumed.
  CHECK(b.uniform() == ref3.uniform());
}

TEST_CASE("beta22 empirical distribution") {
  FrontierModel model;
  model.covariate = CovariateLaw::Beta22;
  Rng rng(2027);

  double mean = 0.0;
  const std::size_t n_mean = 100000;
  for (std::size_t i = 0; i < n_mean; ++i) mean += sample_covariate(model, rng);
  mean /= static_cast<double>(n_mean);
  CHECK(mean == doctest::Approx(0.5).epsilon(0.01));

  std::vector<double> draws(10000);
  for (double& d : draws) d = sample_covariate(model, rng);
  const double ks = oracles::ks_statistic(
      draws, [](double x) { return x * x * (3.0 - 2.0 * x); });
  CHECK(ks < oracles::ks_critical(draws.size(), 0.01));
}

TEST_CASE("response law matches its survival function") {
  FrontierModel model;
  model.frontier = FrontierKind::G2;
  model.gamma = 2.5;
  Rng rng(5150);
  const double x = 0.3;
  const double g = model.frontier_value(x);

  // (1 - Y/g)^gamma should be exactly uniform.
  std::vector<double> transformed(10000);
  for (double& t : transformed) {
    const double y = sample_response(model, x, rng);
    CHECK(y >= 0.0);
    CHECK(y <= g);
    t = std::pow(1.0 - y / g, model.gamma);
  }
  const double ks =
      oracles::ks_statistic(transformed, [](double u) { return u; });
  CHECK(ks < oracles::ks_critical(transformed.size(), 0.01));
}

TEST_CASE("generated samples respect the support") {
  FrontierModel model;
  model.frontier = FrontierKind::G1;
  model.gamma = 3.0;
  model.covariate = CovariateLaw::Beta22;
  model.seed = 99;
  const Sample s = generate_sample(model, 2000);
  CHECK(s.size() == 2000);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double x = s.x(i)[0];
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
    CHECK(s.y(i) >= 0.0);
    CHECK(s.y(i) <= model.frontier_value(x));
  }
  CHECK_THROWS_AS(generate_sample(model, 0), std::domain_error);
}

TEST_CASE("generation is reproducible and seed-sensitive") {
  FrontierModel model;
  model.frontier = FrontierKind::G2;
  model.gamma = 2.0;
  model.covariate = CovariateLaw::Uniform01;
  model.seed = 1234;

  const Sample a = generate_sample(model, 500);
  const Sample b = generate_sample(model, 500);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.x(i)[0] == b.x(i)[0]);
    CHECK(a.y(i) == b.y(i));
  }

  model.seed = 1235;
  const Sample c = generate_sample(model, 500);
  bool any_differs = false;
  for (std::size_t i = 0; i < a.size() && !any_differs; ++i) {
    any_differs = a.x(i)[0] != c.x(i)[0] || a.y(i) != c.y(i);
  }
  CHECK(any_differs);
}

TEST_CASE("empirical survival of Y/g matches (1-q)^gamma") {
  FrontierModel model;
  model.frontier = FrontierKind::G2;
  model.gamma = 2.0;
  model.covariate = CovariateLaw::Uniform01;
  model.seed = 777;
  const std::size_t n = 10000;
  const Sample s = generate_sample(model, n);

  const double tol = 3.0 / std::sqrt(static_cast<double>(n));
  for (double q : {0.25, 0.5, 0.75}) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.y(i) / model.frontier_value(s.x(i)[0]) > q) ++count;
    }
    const double empirical = static_cast<double>(count) / static_cast<double>(n);
    const double expected = std::pow(1.0 - q, model.gamma);
    CHECK(std::abs(empirical - expected) <= tol);
  }
}

TEST_CASE("user-grid frontier interpolates and clamps") {
  FrontierModel model;
  model.frontier = FrontierKind::UserGrid;
  model.knots = {{0.0, 1.0}, {0.5, 2.0}, {1.0, 1.5}};
  model.validate();

  CHECK(model.frontier_value(0.0) == 1.0);
  CHECK(model.frontier_value(0.25) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(model.frontier_value(0.75) == doctest::Approx(1.75).epsilon(1e-15));
  CHECK(model.frontier_value(-3.0) == 1.0);  // clamped
  CHECK(model.frontier_value(4.0) == 1.5);

  // Sampling against a user grid stays under the interpolated curve.
  model.seed = 31;
  const Sample s = generate_sample(model, 300);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s.y(i) <= model.frontier_value(s.x(i)[0]));
  }
}

TEST_CASE("model validation") {
  FrontierModel model;
  model.gamma = 0.0;
  CHECK_THROWS_AS(model.validate(), std::domain_error);

  FrontierModel grid;
  grid.frontier = FrontierKind::UserGrid;
  CHECK_THROWS_AS(grid.validate(), std::domain_error);  // no knots
  grid.knots = {{0.0, 1.0}, {0.0, 2.0}};
  CHECK_THROWS_AS(grid.validate(), std::domain_error);  // not increasing
  grid.knots = {{0.0, 1.0}, {0.5, 0.0}};
  CHECK_THROWS_AS(grid.validate(), std::domain_error);  // non-positive knot
}

TEST_CASE("name parsing round-trips") {
  CHECK(parse_frontier_kind("g1") == FrontierKind::G1);
  CHECK(parse_frontier_kind("g2") == FrontierKind::G2);
  CHECK_THROWS_AS(parse_frontier_kind("g3"), std::invalid_argument);
  CHECK(parse_covariate_law("uniform") == CovariateLaw::Uniform01);
  CHECK(parse_covariate_law("beta22") == CovariateLaw::Beta22);
  CHECK_THROWS_AS(parse_covariate_law("normal"), std::invalid_argument);
  CHECK(frontier_kind_name(FrontierKind::G1) == "g1");
  CHECK(covariate_law_name(CovariateLaw::Beta22) == "beta22");
}

TEST_CASE("replication seeds follow the xor rule") {
  CHECK(replication_seed(42, 1) == (42ull ^ 1ull));
  CHECK(replication_seed(0, 7) == 7ull);
  CHECK(replication_seed(42, 1) != replication_seed(42, 2));
}
