#pragma once

#include <vector>

#include "ratiovec/core.hpp"

namespace ratiovec {

struct SolverConfig {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_iter = 200;
};

/// Logarithmic derivative S(x) = sum m_k / (x - r_k). Well-defined off the
/// roots for any positive real multiplicities; its zeros are the critical
/// points of p, one per interval.
double log_deriv(const PolyLike& p, double x);

/// S'(x) = -sum m_k / (x - r_k)^2, negative everywhere off the roots.
double log_deriv_prime(const PolyLike& p, double x);

/// The N-1 critical points x_1 < ... < x_{N-1}, x_k inside (r_k, r_{k+1}).
/// Bisection on a sign bracket of S, accelerated by Newton steps that are
/// accepted only when they stay inside the bracket.
std::vector<double> critical_points(const PolyLike& p, const SolverConfig& cfg = {});

RatioVector ratio_vector(const PolyLike& p, const SolverConfig& cfg = {});

/// Per-index comparison of critical points between p and q (equal mults,
/// every q root strictly greater). Under that hypothesis every q critical
/// point strictly exceeds the corresponding p critical point.
struct DragReport {
  std::vector<double> x_p;
  std::vector<double> x_q;
  std::vector<bool> strictly_greater;  // x_q[k] > x_p[k]
  bool all_strictly_greater = false;
};

DragReport drag_compare(const PolyLike& p, const PolyLike& q, const SolverConfig& cfg = {});

}  // namespace ratiovec
