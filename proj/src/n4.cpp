#include "ratiovec/n4.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ratiovec/bounds.hpp"

namespace ratiovec::n4 {

namespace {

void check_mults(const Mults& m) {
  for (double v : m)
    if (!(v > 0.0) || !std::isfinite(v))
      throw Error(ErrorCode::NonPositiveMultiplicity, "multiplicities must be positive");
}

}  // namespace

Dets dets(const Candidate& c) {
  check_mults(c.m);
  const double n = c.n();
  const auto [u, v, w] = std::tuple{c.u, c.v, c.w};
  const double m1 = c.m[0], m2 = c.m[1], m3 = c.m[2], m4 = c.m[3];

  const double a11 = n * (w - v) - m3;
  const double a12 = n * (1.0 - w) - m4;
  const double a21 = n * (u - 1.0) * v * (1.0 - w);
  const double a22 = n * (u - 1.0) * v * w + m2;

  Dets out;
  out.d = a11 * a22 - a12 * a21;
  out.d1 = (n * u - m1) * (m2 - n * v * w * (1.0 - u));
  out.d2 = (n * u - m1) * n * v * (1.0 - u) * (1.0 - w);
  return out;
}

double r_eval(const Candidate& c) {
  const Dets dd = dets(c);
  const double n = c.n();
  const double u = c.u, v = c.v, w = c.w;
  const double m1 = c.m[0], m2 = c.m[1], m3 = c.m[2], m4 = c.m[3];

  const double den1 = n * u - m1;
  const double den2 = m2 - n * v * (1.0 - u);
  if (std::abs(den1) <= 1e-12 * n || std::abs(den2) <= 1e-12 * n)
    throw Error(ErrorCode::DegenerateDenominator,
                "nu - m1 or m2 - nv(1-u) vanishes at this candidate");

  const double num = n * v * (1.0 - w) * dd.d1 * dd.d1 +
                     (n * v * w - m1 - m2) * dd.d1 * dd.d2 +
                     (n * (1.0 - u) * (w - v - 1.0) + m2 + m4) * dd.d1 * dd.d +
                     (n * w * (u - 1.0) + m2 + m3) * dd.d2 * dd.d;
  return num / (den1 * den2);
}

MembershipReport membership(const Candidate& c, double tol) {
  MembershipReport rep;
  const Dets dd = dets(c);
  rep.d = dd.d;
  rep.d1 = dd.d1;
  rep.d2 = dd.d2;
  rep.order_ok = dd.d1 > 0.0 && dd.d1 < dd.d2 && dd.d > 0.0;

  const RatioBounds b = ratio_bounds(std::span<const double>(c.m.data(), c.m.size()));
  const double sig[3] = {c.u, c.v, c.w};
  rep.bounds_ok = true;
  for (int k = 0; k < 3; ++k)
    rep.bounds_ok = rep.bounds_ok && b.lower[k] < sig[k] && sig[k] < b.upper[k];

  bool r_defined = false;
  rep.r_value = std::numeric_limits<double>::quiet_NaN();
  try {
    rep.r_value = r_eval(c);
    r_defined = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateDenominator) throw;
  }

  const double scale =
      std::max(1.0, std::abs(dd.d) * std::max(std::abs(dd.d1), std::abs(dd.d2)));
  rep.verdict = rep.order_ok && r_defined && std::abs(rep.r_value) <= tol * scale;
  if (rep.verdict) {
    rep.r = dd.d1 / dd.d;
    rep.s = dd.d2 / dd.d;
  }
  return rep;
}

std::pair<double, double> reconstruct_roots(const Candidate& c, double tol) {
  MembershipReport rep = membership(c, tol);
  if (!rep.verdict)
    throw Error(ErrorCode::NotAMember, "(u, v, w) is not a ratio vector for these mults");
  return {*rep.r, *rep.s};
}

std::array<double, 3> system_residual(double r, double s, const Candidate& c) {
  check_mults(c.m);
  const double n = c.n();
  const double u = c.u, v = c.v, w = c.w;
  const double m1 = c.m[0], m2 = c.m[1], m3 = c.m[2], m4 = c.m[3];

  std::array<double, 3> f{};
  f[0] = (n * (w - v) - m3) * r + (n * (1.0 - w) - m4) * s - (n * u - m1);
  f[1] = n * v * (1.0 - w) * r * r + (n * v * w - m1 - m2) * r * s +
         (n * (1.0 - u) * (w - v - 1.0) + m2 + m4) * r +
         (n * w * (u - 1.0) + m2 + m3) * s;
  f[2] = n * v * (u - 1.0) * (1.0 - w) * r + (n * v * w * (u - 1.0) + m2) * s;
  return f;
}

bool t4_monotone_sufficient(const Mults& m) {
  check_mults(m);
  return m[0] + m[3] <= std::min(3.0 * m[1] - m[2], 3.0 * m[2] - m[1]);
}

}  // namespace ratiovec::n4
