#include "ratiovec/solver.hpp"

#include <cmath>
#include <string>

namespace ratiovec {

namespace {

void check_config(const SolverConfig& cfg) {
  if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0) || cfg.max_iter < 1)
    throw Error(ErrorCode::ConfigInvalid, "abs_tol and rel_tol must be positive, max_iter >= 1");
}

// Evaluation closer than this to a root is rejected; the solver never gets
// closer than root_gap * 2e-3 (see bracket setup below).
double eval_guard(const PolyLike& p) { return p.root_gap() * 1e-3; }

double s_value(const PolyLike& p, double x) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p.mults()[i] / (x - p.roots()[i]);
  return s;
}

double s_prime(const PolyLike& p, double x) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double d = x - p.roots()[i];
    s -= p.mults()[i] / (d * d);
  }
  return s;
}

void check_off_roots(const PolyLike& p, double x) {
  double guard = eval_guard(p);
  for (double r : p.roots())
    if (std::abs(x - r) < guard)
      throw Error(ErrorCode::EvalAtRoot, "x = " + std::to_string(x) + " too close to a root");
}

}  // namespace

double log_deriv(const PolyLike& p, double x) {
  check_off_roots(p, x);
  return s_value(p, x);
}

double log_deriv_prime(const PolyLike& p, double x) {
  check_off_roots(p, x);
  return s_prime(p, x);
}

std::vector<double> critical_points(const PolyLike& p, const SolverConfig& cfg) {
  check_config(cfg);
  const auto& r = p.roots();
  const double eps_floor = p.root_gap() * 2e-3;
  std::vector<double> out(p.size() - 1);

  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    const double lo = r[k], hi = r[k + 1];
    const double width = hi - lo;

    // S runs from +inf at lo+ to -inf at hi-. Secure finite endpoints of the
    // right sign, halving the offset on overflow or a wrong-signed value.
    double eps_a = width * 1e-3;
    double a = lo + eps_a, sa = s_value(p, a);
    while (!(std::isfinite(sa) && sa > 0.0) && eps_a * 0.5 >= eps_floor) {
      eps_a *= 0.5;
      a = lo + eps_a;
      sa = s_value(p, a);
    }
    double eps_b = width * 1e-3;
    double b = hi - eps_b, sb = s_value(p, b);
    while (!(std::isfinite(sb) && sb < 0.0) && eps_b * 0.5 >= eps_floor) {
      eps_b *= 0.5;
      b = hi - eps_b;
      sb = s_value(p, b);
    }
    if (!(std::isfinite(sa) && sa > 0.0 && std::isfinite(sb) && sb < 0.0))
      throw Error(ErrorCode::ConvergenceFailure,
                  "could not bracket the critical point in interval " + std::to_string(k + 1));

    const double tol_width = cfg.abs_tol + cfg.rel_tol * width;
    double x = 0.5 * (a + b);
    int iter = 0;
    while (true) {
      if (++iter > cfg.max_iter)
        throw Error(ErrorCode::ConvergenceFailure,
                    "max_iter exceeded in interval " + std::to_string(k + 1));
      double s = s_value(p, x);
      if (s == 0.0) break;
      if (s > 0.0)
        a = x;
      else
        b = x;
      if (b - a <= tol_width) break;
      double xn = x - s / s_prime(p, x);
      x = (xn > a && xn < b) ? xn : 0.5 * (a + b);
    }

    // Final Newton polish from the bracket midpoint, kept inside the bracket.
    double mid = 0.5 * (a + b);
    double xn = mid - s_value(p, mid) / s_prime(p, mid);
    out[k] = (std::isfinite(xn) && xn > a && xn < b) ? xn : mid;
  }
  return out;
}

RatioVector ratio_vector(const PolyLike& p, const SolverConfig& cfg) {
  std::vector<double> xs = critical_points(p, cfg);
  const auto& r = p.roots();
  std::vector<double> sigmas(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) sigmas[k] = (xs[k] - r[k]) / (r[k + 1] - r[k]);
  return RatioVector{std::move(sigmas), std::move(xs), p};
}

DragReport drag_compare(const PolyLike& p, const PolyLike& q, const SolverConfig& cfg) {
  if (p.size() != q.size() || p.mults() != q.mults())
    throw Error(ErrorCode::MultiplicityMismatch, "p and q must have identical multiplicities");
  for (std::size_t k = 0; k < p.size(); ++k)
    if (!(q.roots()[k] > p.roots()[k]))
      throw Error(ErrorCode::HypothesisViolated,
                  "q root " + std::to_string(k + 1) + " does not exceed the p root");

  DragReport rep;
  rep.x_p = critical_points(p, cfg);
  rep.x_q = critical_points(q, cfg);
  rep.strictly_greater.resize(rep.x_p.size());
  rep.all_strictly_greater = true;
  for (std::size_t k = 0; k < rep.x_p.size(); ++k) {
    rep.strictly_greater[k] = rep.x_q[k] > rep.x_p[k];
    rep.all_strictly_greater = rep.all_strictly_greater && rep.strictly_greater[k];
  }
  return rep;
}

}  // namespace ratiovec
