#pragma once

#include <span>
#include <vector>

#include "ratiovec/error.hpp"

namespace ratiovec {

inline constexpr double kDefaultRootGap = 1e-9;

/// A polynomial-like function: strictly increasing real roots r_1 < ... < r_N
/// paired with positive real multiplicities m_1, ..., m_N (not necessarily
/// integers). Immutable; build one through validate_instance().
class PolyLike {
 public:
  const std::vector<double>& roots() const noexcept { return roots_; }
  const std::vector<double>& mults() const noexcept { return mults_; }

  /// Sum of the multiplicities (the "degree").
  double n() const noexcept { return n_; }

  /// Number of roots, N.
  std::size_t size() const noexcept { return roots_.size(); }

  /// Minimum root gap this instance was validated against.
  double root_gap() const noexcept { return gap_; }

 private:
  friend PolyLike validate_instance(std::span<const double>, std::span<const double>, double);
  PolyLike(std::vector<double> roots, std::vector<double> mults, double n, double gap)
      : roots_(std::move(roots)), mults_(std::move(mults)), n_(n), gap_(gap) {}

  std::vector<double> roots_;
  std::vector<double> mults_;
  double n_ = 0.0;
  double gap_ = kDefaultRootGap;
};

/// Validates raw input into a PolyLike. Roots are never reordered: any
/// violation of roots[k+1] > roots[k] + gap is an error.
PolyLike validate_instance(std::span<const double> roots, std::span<const double> mults,
                           double gap = kDefaultRootGap);

/// Affine changes of variable x -> (x - a)/b with b > 0, which leave ratio
/// vectors unchanged.
enum class NormalizationScheme {
  Translate2,   // r2 -> 0
  N3Canonical,  // r1 -> 0, r2 -> 1 (N = 3 only)
  N4Canonical,  // r1 -> -1, r2 -> 0 (N = 4 only)
};

PolyLike normalize(const PolyLike& p, NormalizationScheme scheme);

/// The N-1 interval ratios together with the critical points that produced
/// them and the instance they belong to.
struct RatioVector {
  std::vector<double> sigmas;           // (x_k - r_k) / (r_{k+1} - r_k), each in (0,1)
  std::vector<double> critical_points;  // x_k, strictly inside (r_k, r_{k+1})
  PolyLike source;
};

/// k-th elementary symmetric function; e_0 = 1. One-pass recurrence.
double elem_sym(std::span<const double> values, int k);

/// e_k of `values` with position j removed.
double elem_sym_deleted(std::span<const double> values, int k, int j);

struct SystemResidual {
  std::vector<double> values;  // one residual per equation
  double norm = 0.0;           // max absolute value
};

/// Residuals of the N-1 root/ratio equations in the r2 = 0 normalization.
/// roots_r2_dropped = (r1, r3, ..., rN); mults has length N, sigmas N-1.
/// All residuals vanish exactly when (roots, sigmas) solves the system.
SystemResidual system_residual(std::span<const double> mults,
                               std::span<const double> roots_r2_dropped,
                               std::span<const double> sigmas);

/// Convenience: translate p so that r2 = 0, drop r2, and evaluate.
SystemResidual system_residual(const PolyLike& p, std::span<const double> sigmas);

}  // namespace ratiovec
