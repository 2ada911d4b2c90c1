#pragma once

#include <array>
#include <optional>

#include "ratiovec/core.hpp"

// Complete characterization of ratio vectors for N = 3: the closed-form
// ratios in the canonical (0, 1, r) frame, the membership test, the inverse
// construction from the first ratio, and the classifier deciding whether
// sigma1 < sigma2 holds for every root configuration.
namespace ratiovec::n3 {

using Mults = std::array<double, 3>;

/// The second ratio determined by the first: sigma2 = m2 / (n (1 - sigma1)).
/// sigma1 must lie strictly inside (m1/n, m1/(m1+m2)).
double sigma2_from_sigma1(const Mults& m, double sigma1);

struct Verdict {
  bool is_ratio_vector = false;
  double relation_residual = 0.0;  // n (1 - sigma1) sigma2 - m2
  bool bounds_ok = false;
};

/// Membership test: the interval bounds plus the sigma1/sigma2 relation,
/// with |residual| <= tol * n.
Verdict is_ratio_vector(const Mults& m, double sigma1, double sigma2, double tol = 1e-9);

/// Inverse construction: the third root r > 1 such that the instance with
/// roots (0, 1, r) has first ratio exactly u.
double root_from_sigma1(const Mults& m, double u);

struct ClosedFormRatios {
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double discriminant = 0.0;
};

/// Both ratios of the instance with roots (0, 1, r), r > 1, in closed form.
ClosedFormRatios closed_form_ratios(const Mults& m, double r);

struct MonotonicityVerdict {
  bool always_sigma1_lt_sigma2 = false;
  bool condition_a = false;  // m2^2 + m1 (m2 - m3) > 0
  bool condition_b = false;  // m2 >= 2 m1 m3 / n
  bool condition_c = false;  // n/4 < m2 < 2 m1 m3 / n
};

/// Decides whether sigma1 < sigma2 for every root configuration:
/// A and (B or C).
MonotonicityVerdict classify_monotonicity(const Mults& m);

/// h(r) = (m2^2 + m1(m2 - m3)) r^2 + m2 (m3 - m2 - m1) r + m2^2 for r > 1;
/// its sign decides sigma1 < sigma2 pointwise (positive iff strict).
double h_poly(const Mults& m, double r);

/// Searches for r > 1 with h(r) <= 0, i.e. an instance where sigma1 >= sigma2.
/// Geometric scan plus golden-section minimization of the quadratic h.
/// Empty when the classifier verdict is true.
std::optional<double> find_order_violation(const Mults& m);

}  // namespace ratiovec::n3
