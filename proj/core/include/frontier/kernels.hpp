// Compactly supported kernel densities on the unit ball, their rescaled
// forms K_h(t) = K(t/h)/h^d and the L2/L3 moment constants used by the
// variance normalization.
#pragma once

#include <span>
#include <string>
#include <string_view>

namespace frontier {

enum class KernelFamily { CosineSquared, Epanechnikov, Uniform };

/// Accepts "cosine2", "epanechnikov" or "uniform" (the CLI spelling).
KernelFamily parse_kernel_family(std::string_view name);
std::string kernel_family_name(KernelFamily family);

// A probability density supported on the unit ball of R^d, radial in |t|:
//
//   CosineSquared  c * cos^2(pi |t| / 2)   (d=1: cos^2(pi t/2) on [-1,1])
//   Epanechnikov   c * (1 - |t|^2)
//   Uniform        1 / vol(ball)
//
// For d = 1 the normalizer and the moments int K^2, int K^3 use closed
// forms; for d > 1 they are computed once by adaptive quadrature of the
// radial profile. Immutable after construction, freely sharable.
//
// The radial choice for d > 1 keeps the support exactly inside the unit
// ball; a product form would spread it over a cube instead.
class KernelSpec {
 public:
  explicit KernelSpec(KernelFamily family = KernelFamily::CosineSquared,
                      int dimension = 1);

  /// K(t); the length of t must match the spec dimension.
  double eval(std::span<const double> t) const;
  /// One-dimensional shortcut for K(t).
  double eval1(double t) const;

  /// K_h(v) = K(v/h) / h^d; h must be positive.
  double scaled_eval(double h, std::span<const double> v) const;
  double scaled_eval1(double h, double v) const;

  /// Kernel value at radius r >= 0 (zero for r > 1). eval() is
  /// radial(|t|); estimator loops use this to avoid building t/h vectors.
  double radial(double r) const;

  int dimension() const { return dimension_; }
  KernelFamily family() const { return family_; }
  double normalizer() const { return normalizer_; }
  /// int_B K^2(t) dt (3/4 for the one-dimensional cosine-squared kernel).
  double l2_moment() const { return l2_moment_; }
  /// int_B K^3(t) dt.
  double l3_moment() const { return l3_moment_; }
  /// Bound on |K(s)-K(t)| / |s-t|; +infinity for the Uniform family,
  /// which jumps at the support boundary.
  double lipschitz_bound() const { return lipschitz_; }

 private:
  KernelFamily family_;
  int dimension_;
  double normalizer_;
  double l2_moment_;
  double l3_moment_;
  double lipschitz_;
};

}  // namespace frontier
