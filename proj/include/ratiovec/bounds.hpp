#pragma once

#include <span>
#include <vector>

#include "ratiovec/core.hpp"

namespace ratiovec {

struct RatioBounds {
  std::vector<double> lower;  // m_k / (m_k + ... + m_N)
  std::vector<double> upper;  // (m_1 + ... + m_k) / (m_1 + ... + m_{k+1})
};

/// Per-ratio bounds from the multiplicities alone. For N = 2 both formulas
/// collapse to m1/(m1+m2) and the bounds are attained with equality.
RatioBounds ratio_bounds(std::span<const double> mults);

struct BoundsReport {
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> sigmas;
  bool all_strictly_inside = false;
};

/// Checks a computed ratio vector against its bounds. Strict interiority for
/// N >= 3; for N = 2 the flag tests equality within 1e-12 instead.
BoundsReport check_bounds(const RatioVector& rv);

}  // namespace ratiovec
