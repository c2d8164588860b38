#include "frontier/kernels.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace frontier {

namespace {

double profile_value(KernelFamily family, double r) {
  switch (family) {
    case KernelFamily::CosineSquared: {
      const double c = std::cos(0.5 * std::numbers::pi * r);
      return c * c;
    }
    case KernelFamily::Epanechnikov:
      return 1.0 - r * r;
    case KernelFamily::Uniform:
      return 1.0;
  }
  return 0.0;  // unreachable
}

// Max of |d profile / dr| over [0,1]; the gradient of the radial kernel.
double profile_slope_max(KernelFamily family) {
  switch (family) {
    case KernelFamily::CosineSquared:
      return 0.5 * std::numbers::pi;  // |(pi/2) sin(pi r)|
    case KernelFamily::Epanechnikov:
      return 2.0;
    case KernelFamily::Uniform:
      return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

// Surface area of the unit sphere in R^d: 2 pi^{d/2} / Gamma(d/2).
double unit_sphere_area(int d) {
  return std::exp(std::numbers::ln2 + 0.5 * d * std::log(std::numbers::pi) -
                  std::lgamma(0.5 * d));
}

struct KernelConstants {
  double normalizer;
  double l2;
  double l3;
};

KernelConstants compute_constants(KernelFamily family, int d) {
  if (d == 1) {
    switch (family) {
      case KernelFamily::CosineSquared:
        return {1.0, 0.75, 0.625};
      case KernelFamily::Epanechnikov:
        return {0.75, 0.6, 27.0 / 70.0};
      case KernelFamily::Uniform:
        return {0.5, 0.5, 0.25};
    }
  }
  // int_B f(|t|) dt = S_{d-1} int_0^1 f(r) r^{d-1} dr for a radial integrand.
  const double area = unit_sphere_area(d);
  auto radial_moment = [&](int q) {
    return area * integrate(
                      [&](double r) {
                        return std::pow(profile_value(family, r), q) *
                               std::pow(r, d - 1);
                      },
                      0.0, 1.0);
  };
  const double mass = radial_moment(1);
  const double c = 1.0 / mass;
  return {c, c * c * radial_moment(2), c * c * c * radial_moment(3)};
}

}  // namespace

KernelFamily parse_kernel_family(std::string_view name) {
  if (name == "cosine2") return KernelFamily::CosineSquared;
  if (name == "epanechnikov") return KernelFamily::Epanechnikov;
  if (name == "uniform") return KernelFamily::Uniform;
  throw std::invalid_argument("unknown kernel family '" + std::string(name) +
                              "' (expected cosine2, epanechnikov or uniform)");
}

std::string kernel_family_name(KernelFamily family) {
  switch (family) {
    case KernelFamily::CosineSquared:
      return "cosine2";
    case KernelFamily::Epanechnikov:
      return "epanechnikov";
    case KernelFamily::Uniform:
      return "uniform";
  }
  return "?";
}

KernelSpec::KernelSpec(KernelFamily family, int dimension)
    : family_(family), dimension_(dimension) {
  if (dimension < 1) {
    throw std::invalid_argument("KernelSpec: dimension must be >= 1");
  }
  const KernelConstants k = compute_constants(family, dimension);
  normalizer_ = k.normalizer;
  l2_moment_ = k.l2;
  l3_moment_ = k.l3;
  lipschitz_ = normalizer_ * profile_slope_max(family);
}

double KernelSpec::radial(double r) const {
  if (r > 1.0) return 0.0;
  return normalizer_ * profile_value(family_, r);
}

double KernelSpec::eval(std::span<const double> t) const {
  if (static_cast<int>(t.size()) != dimension_) {
    throw std::domain_error("KernelSpec::eval: dimension mismatch");
  }
  double ss = 0.0;
  for (double v : t) ss += v * v;
  return radial(std::sqrt(ss));
}

double KernelSpec::eval1(double t) const {
  if (dimension_ != 1) {
    throw std::domain_error("KernelSpec::eval1: kernel is not one-dimensional");
  }
  return radial(std::abs(t));
}

double KernelSpec::scaled_eval(double h, std::span<const double> v) const {
  if (!(h > 0.0)) {
    throw std::domain_error("KernelSpec::scaled_eval: bandwidth must be positive");
  }
  if (static_cast<int>(v.size()) != dimension_) {
    throw std::domain_error("KernelSpec::scaled_eval: dimension mismatch");
  }
  double ss = 0.0;
  for (double x : v) ss += x * x;
  return radial(std::sqrt(ss) / h) / std::pow(h, dimension_);
}

double KernelSpec::scaled_eval1(double h, double v) const {
  if (!(h > 0.0)) {
    throw std::domain_error("KernelSpec::scaled_eval1: bandwidth must be positive");
  }
  if (dimension_ != 1) {
    throw std::domain_error("KernelSpec::scaled_eval1: kernel is not one-dimensional");
  }
  return radial(std::abs(v) / h) / h;
}

}  // namespace frontier
