#include "ratiovec/n3.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ratiovec::n3 {

namespace {

void check_mults(const Mults& m) {
  for (double v : m)
    if (!(v > 0.0) || !std::isfinite(v))
      throw Error(ErrorCode::NonPositiveMultiplicity, "multiplicities must be positive");
}

double sum(const Mults& m) { return m[0] + m[1] + m[2]; }

void check_sigma1_range(const Mults& m, double u) {
  double n = sum(m);
  if (!(u > m[0] / n && u < m[0] / (m[0] + m[1])))
    throw Error(ErrorCode::Sigma1OutOfRange,
                "sigma1 = " + std::to_string(u) + " outside (m1/n, m1/(m1+m2))");
}

}  // namespace

double sigma2_from_sigma1(const Mults& m, double sigma1) {
  check_mults(m);
  check_sigma1_range(m, sigma1);
  return m[1] / (sum(m) * (1.0 - sigma1));
}

Verdict is_ratio_vector(const Mults& m, double sigma1, double sigma2, double tol) {
  check_mults(m);
  double n = sum(m);
  Verdict v;
  v.bounds_ok = sigma1 > m[0] / n && sigma1 < m[0] / (m[0] + m[1]) &&
                sigma2 > m[1] / (m[1] + m[2]) && sigma2 < (m[0] + m[1]) / n;
  v.relation_residual = n * (1.0 - sigma1) * sigma2 - m[1];
  v.is_ratio_vector = v.bounds_ok && std::abs(v.relation_residual) <= tol * n;
  return v;
}

double root_from_sigma1(const Mults& m, double u) {
  check_mults(m);
  check_sigma1_range(m, u);
  return u * ((1.0 - u) * sum(m) - m[1]) / (m[0] - (m[0] + m[1]) * u);
}

ClosedFormRatios closed_form_ratios(const Mults& m, double r) {
  check_mults(m);
  if (!(r > 1.0))
    throw Error(ErrorCode::DomainError, "canonical third root must satisfy r > 1");
  double n = sum(m);
  double disc = (m[0] + m[1]) * (m[0] + m[1]) * r * r +
                2.0 * (m[1] * m[2] - m[0] * n) * r + (m[0] + m[2]) * (m[0] + m[2]);
  if (disc < 0.0)
    throw Error(ErrorCode::NegativeDiscriminant, "discriminant negative at r = " +
                                                     std::to_string(r));
  double root = std::sqrt(disc);
  double base = (n - m[2]) * r - n - m[1];
  ClosedFormRatios out;
  out.sigma1 = (base - root) / (2.0 * n) + 1.0;
  out.sigma2 = ((base + root) / (2.0 * n)) / (r - 1.0);
  out.discriminant = disc;
  return out;
}

MonotonicityVerdict classify_monotonicity(const Mults& m) {
  check_mults(m);
  double n = sum(m);
  MonotonicityVerdict v;
  v.condition_a = m[1] * m[1] + m[0] * (m[1] - m[2]) > 0.0;
  v.condition_b = m[1] >= 2.0 * m[0] * m[2] / n;
  v.condition_c = n / 4.0 < m[1] && m[1] < 2.0 * m[0] * m[2] / n;
  v.always_sigma1_lt_sigma2 = v.condition_a && (v.condition_b || v.condition_c);
  return v;
}

double h_poly(const Mults& m, double r) {
  check_mults(m);
  if (!(r > 1.0))
    throw Error(ErrorCode::DomainError, "h is examined on r > 1 only");
  double a = m[1] * m[1] + m[0] * (m[1] - m[2]);
  double b = m[1] * (m[2] - m[1] - m[0]);
  return (a * r + b) * r + m[1] * m[1];
}

std::optional<double> find_order_violation(const Mults& m) {
  check_mults(m);
  const double a = m[1] * m[1] + m[0] * (m[1] - m[2]);
  const double b = m[1] * (m[2] - m[1] - m[0]);
  const double c = m[1] * m[1];
  auto h = [&](double r) { return (a * r + b) * r + c; };
  auto tol_at = [&](double r) {
    return 1e-12 * (std::abs(a) * r * r + std::abs(b) * r + c + 1.0);
  };

  // Geometric scan catches every concave case (h -> -inf) and any sign change.
  for (int j = 0; j <= 60; ++j) {
    double r = 1.0 + std::ldexp(1e-3, j);
    if (!std::isfinite(r) || !std::isfinite(h(r))) break;
    if (h(r) <= 0.0) return r;
  }

  // Convex case: minimize over the bracket around the vertex by golden section.
  if (a > 0.0) {
    double vertex = -b / (2.0 * a);
    if (vertex > 1.0) {
      const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
      double lo = 1.0, hi = 2.0 * vertex + 1.0;
      double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
      double h1 = h(x1), h2 = h(x2);
      for (int it = 0; it < 200 && hi - lo > 1e-12 * (1.0 + hi); ++it) {
        if (h1 <= h2) {
          hi = x2;
          x2 = x1;
          h2 = h1;
          x1 = hi - gr * (hi - lo);
          h1 = h(x1);
        } else {
          lo = x1;
          x1 = x2;
          h1 = h2;
          x2 = lo + gr * (hi - lo);
          h2 = h(x2);
        }
      }
      double best = 0.5 * (lo + hi);
      if (best > 1.0 && h(best) <= tol_at(best)) return best;
    }
  }
  return std::nullopt;
}

}  // namespace ratiovec::n3
