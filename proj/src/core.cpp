#include "ratiovec/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ratiovec/detail/system_eval.hpp"

namespace ratiovec {

PolyLike validate_instance(std::span<const double> roots, std::span<const double> mults,
                           double gap) {
  if (roots.size() != mults.size())
    throw Error(ErrorCode::LengthMismatch, std::to_string(roots.size()) + " roots vs " +
                                               std::to_string(mults.size()) + " multiplicities");
  if (roots.size() < 2)
    throw Error(ErrorCode::TooFewRoots, "need at least 2 roots, got " +
                                            std::to_string(roots.size()));
  if (!(gap > 0.0) || !std::isfinite(gap))
    throw Error(ErrorCode::ConfigInvalid, "root gap must be positive and finite");

  double n = 0.0;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (!(mults[i] > 0.0) || !std::isfinite(mults[i]))
      throw Error(ErrorCode::NonPositiveMultiplicity,
                  "m[" + std::to_string(i + 1) + "] = " + std::to_string(mults[i]));
    n += mults[i];
  }
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    if (!std::isfinite(roots[i]) || !std::isfinite(roots[i + 1]) ||
        !(roots[i + 1] > roots[i] + gap))
      throw Error(ErrorCode::NonIncreasingRoots,
                  "roots[" + std::to_string(i + 2) + "] must exceed roots[" +
                      std::to_string(i + 1) + "] by more than the minimum gap");
  }
  return PolyLike(std::vector<double>(roots.begin(), roots.end()),
                  std::vector<double>(mults.begin(), mults.end()), n, gap);
}

PolyLike normalize(const PolyLike& p, NormalizationScheme scheme) {
  const auto& r = p.roots();
  double a = 0.0, b = 1.0;
  switch (scheme) {
    case NormalizationScheme::Translate2:
      a = r[1];
      break;
    case NormalizationScheme::N3Canonical:
      if (p.size() != 3)
        throw Error(ErrorCode::SchemeArityMismatch,
                    "N3Canonical requires N = 3, got N = " + std::to_string(p.size()));
      a = r[0];
      b = r[1] - r[0];
      break;
    case NormalizationScheme::N4Canonical:
      if (p.size() != 4)
        throw Error(ErrorCode::SchemeArityMismatch,
                    "N4Canonical requires N = 4, got N = " + std::to_string(p.size()));
      a = r[1];
      b = r[1] - r[0];
      break;
  }
  std::vector<double> mapped(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) mapped[i] = (r[i] - a) / b;
  return validate_instance(mapped, p.mults(), p.root_gap());
}

double elem_sym(std::span<const double> values, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > values.size())
    throw Error(ErrorCode::IndexOutOfRange,
                "k = " + std::to_string(k) + " for list of length " +
                    std::to_string(values.size()));
  return detail::elem_sym_of<double>(values, static_cast<std::size_t>(k));
}

double elem_sym_deleted(std::span<const double> values, int k, int j) {
  if (j < 0 || static_cast<std::size_t>(j) >= values.size())
    throw Error(ErrorCode::IndexOutOfRange, "deleted index j = " + std::to_string(j));
  if (k < 0 || static_cast<std::size_t>(k) > values.size() - 1)
    throw Error(ErrorCode::IndexOutOfRange,
                "k = " + std::to_string(k) + " for deleted list of length " +
                    std::to_string(values.size() - 1));
  return detail::elem_sym_drop1<double>(values, static_cast<std::size_t>(k),
                                        static_cast<std::size_t>(j));
}

SystemResidual system_residual(std::span<const double> mults,
                               std::span<const double> roots_r2_dropped,
                               std::span<const double> sigmas) {
  const std::size_t n_roots = mults.size();
  if (n_roots < 2)
    throw Error(ErrorCode::ArityMismatch, "need at least 2 multiplicities");
  if (roots_r2_dropped.size() != n_roots - 1 || sigmas.size() != n_roots - 1)
    throw Error(ErrorCode::ArityMismatch,
                "expected " + std::to_string(n_roots - 1) + " dropped roots and ratios");

  std::vector<double> f = detail::system_residual_t<double>(mults, roots_r2_dropped, sigmas);
  SystemResidual out{std::move(f), 0.0};
  for (double v : out.values) out.norm = std::max(out.norm, std::abs(v));
  return out;
}

SystemResidual system_residual(const PolyLike& p, std::span<const double> sigmas) {
  PolyLike shifted = normalize(p, NormalizationScheme::Translate2);
  std::vector<double> dropped;
  dropped.reserve(p.size() - 1);
  const auto& r = shifted.roots();
  dropped.push_back(r[0]);
  for (std::size_t i = 2; i < r.size(); ++i) dropped.push_back(r[i]);
  return system_residual(shifted.mults(), dropped, sigmas);
}

}  // namespace ratiovec
