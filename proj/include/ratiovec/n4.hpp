#pragma once

#include <array>
#include <optional>
#include <utility>

#include "ratiovec/core.hpp"

// N = 4 characterization in the canonical frame with roots (-1, 0, r, s):
// whether a candidate (u, v, w) is a ratio vector is decided by the sign and
// ordering of the determinants D, D1, D2 together with the vanishing of the
// degree-7 polynomial R, and the roots are recovered as r = D1/D, s = D2/D.
namespace ratiovec::n4 {

using Mults = std::array<double, 4>;

struct Candidate {
  double u = 0.0, v = 0.0, w = 0.0;  // sigma1, sigma2, sigma3
  Mults m{};

  double n() const noexcept { return m[0] + m[1] + m[2] + m[3]; }
};

struct Dets {
  double d = 0.0;   // D
  double d1 = 0.0;  // D1 = (nu - m1)(m2 - nvw(1-u))
  double d2 = 0.0;  // D2 = (nu - m1) nv (1-u)(1-w)
};

Dets dets(const Candidate& c);

/// R(u, v, w): the quotient of the quartic combination of D, D1, D2 by
/// (nu - m1)(m2 - nv(1-u)). Throws DegenerateDenominator when either factor
/// is within 1e-12 * n of zero; both are bounded away from zero on the
/// feasible region.
double r_eval(const Candidate& c);

struct MembershipReport {
  double d = 0.0, d1 = 0.0, d2 = 0.0;
  double r_value = 0.0;   // R(u,v,w); NaN when the denominator is degenerate
  bool bounds_ok = false; // interval bounds on (u, v, w); diagnostic, not gating
  bool order_ok = false;  // 0 < D1 < D2 and D > 0
  bool verdict = false;   // order_ok and |R| <= tol (scale-normalized)
  std::optional<double> r, s;  // present iff verdict
};

MembershipReport membership(const Candidate& c, double tol = 1e-7);

/// The unique pair 0 < r < s whose instance (-1, 0, r, s) has ratio vector
/// (u, v, w). Throws NotAMember when the membership verdict fails.
std::pair<double, double> reconstruct_roots(const Candidate& c, double tol = 1e-7);

/// Residuals of the three canonical-frame equations at (r, s, u, v, w).
std::array<double, 3> system_residual(double r, double s, const Candidate& c);

/// Sufficient condition for sigma1 < sigma2 < sigma3:
/// m1 + m4 <= min(3 m2 - m3, 3 m3 - m2).
bool t4_monotone_sufficient(const Mults& m);

}  // namespace ratiovec::n4
