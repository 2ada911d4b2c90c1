#include "ratiovec/bounds.hpp"

#include <cmath>
#include <string>

namespace ratiovec {

RatioBounds ratio_bounds(std::span<const double> mults) {
  const std::size_t n_roots = mults.size();
  if (n_roots < 2)
    throw Error(ErrorCode::ArityTooSmall, "need at least 2 multiplicities, got " +
                                              std::to_string(n_roots));
  for (std::size_t i = 0; i < n_roots; ++i)
    if (!(mults[i] > 0.0))
      throw Error(ErrorCode::NonPositiveMultiplicity, "m[" + std::to_string(i + 1) + "]");

  // Suffix sums right-to-left for the lower bounds, prefix sums left-to-right
  // for the upper bounds; all terms positive, so both are well conditioned.
  std::vector<double> suffix(n_roots + 1, 0.0);
  for (std::size_t i = n_roots; i-- > 0;) suffix[i] = suffix[i + 1] + mults[i];

  RatioBounds b;
  b.lower.resize(n_roots - 1);
  b.upper.resize(n_roots - 1);
  double prefix = 0.0;
  for (std::size_t k = 0; k + 1 < n_roots; ++k) {
    b.lower[k] = mults[k] / suffix[k];
    prefix += mults[k];
    b.upper[k] = prefix / (prefix + mults[k + 1]);
  }
  return b;
}

BoundsReport check_bounds(const RatioVector& rv) {
  RatioBounds b = ratio_bounds(rv.source.mults());
  BoundsReport rep{std::move(b.lower), std::move(b.upper), rv.sigmas, true};
  if (rv.source.size() == 2) {
    rep.all_strictly_inside = std::abs(rep.sigmas[0] - rep.lower[0]) <= 1e-12;
    return rep;
  }
  for (std::size_t k = 0; k < rep.sigmas.size(); ++k)
    if (!(rep.lower[k] < rep.sigmas[k] && rep.sigmas[k] < rep.upper[k])) {
      rep.all_strictly_inside = false;
      break;
    }
  return rep;
}

}  // namespace ratiovec
