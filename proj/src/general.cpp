#include "ratiovec/general.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "ratiovec/detail/system_eval.hpp"
#include "ratiovec/n4.hpp"
#include "ratiovec/rng.hpp"
#include "ratiovec/solver.hpp"

namespace ratiovec::general {

namespace {

using Complex = std::complex<double>;

void check_solve_inputs(std::span<const double> mults, std::span<const double> sigmas,
                        const SolveConfig& cfg) {
  if (mults.size() < 3)
    throw Error(ErrorCode::ArityMismatch, "solver requires N >= 3 roots");
  if (sigmas.size() != mults.size() - 1)
    throw Error(ErrorCode::ArityMismatch,
                "expected " + std::to_string(mults.size() - 1) + " ratios, got " +
                    std::to_string(sigmas.size()));
  for (double m : mults)
    if (!(m > 0.0) || !std::isfinite(m))
      throw Error(ErrorCode::NonPositiveMultiplicity, "multiplicities must be positive");
  if (!(cfg.tol > 0.0) || cfg.max_iter < 1 || cfg.starts < 1 || cfg.max_backtracks < 0)
    throw Error(ErrorCode::ConfigInvalid, "tol > 0, max_iter >= 1, starts >= 1 required");
}

template <typename T>
double abs_of(const T& v) {
  return std::abs(v);
}

// Residual with the scale fixed: the full dropped-root list is (-1, z...).
template <typename T>
std::vector<T> residual_fixed(std::span<const double> mults, std::span<const double> sig,
                              const std::vector<T>& z) {
  std::vector<T> r(z.size() + 1);
  r[0] = T(-1.0);
  std::copy(z.begin(), z.end(), r.begin() + 1);
  return detail::system_residual_t<T>(mults, r, sig);
}

// Equation k is homogeneous of degree k in the roots, so residuals are
// compared against n * M^k with M = max(1, |roots|_inf). This makes the norm
// insensitive to the overall scale the iterates wander to.
template <typename T>
double scaled_norm(std::span<const double> mults, const std::vector<T>& z,
                   const std::vector<T>& f) {
  double n = 0.0;
  for (double m : mults) n += m;
  double big = 1.0;
  for (const T& v : z) big = std::max(big, abs_of(v));
  double out = 0.0, scale = n;
  for (std::size_t k = 0; k < f.size(); ++k) {
    scale *= big;
    out = std::max(out, abs_of(f[k]) / scale);
  }
  return out;
}

template <typename T>
double norm2sq(const std::vector<T>& f) {
  double s = 0.0;
  for (const T& v : f) s += std::norm(std::complex<double>(v));
  return s;
}

template <>
double norm2sq<double>(const std::vector<double>& f) {
  double s = 0.0;
  for (double v : f) s += v * v;
  return s;
}

template <typename T>
struct StartOutcome {
  bool converged = false;
  std::vector<T> z;
  double norm = std::numeric_limits<double>::infinity();
};

// One damped Gauss-Newton run. The system has N-1 equations in N-2 unknowns;
// steps solve the least-squares subproblem and are halved until the 2-norm
// decreases. A start that cannot decrease any further has stalled.
template <typename T>
StartOutcome<T> run_start(std::span<const double> mults, std::span<const double> sig,
                          std::vector<T> z, const SolveConfig& cfg) {
  using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
  const std::size_t len = mults.size() - 1;  // residual count
  const std::size_t nz = len - 1;            // unknown count

  std::vector<T> f = residual_fixed(mults, sig, z);
  double fsq = norm2sq(f);

  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    if (scaled_norm(mults, z, f) <= cfg.tol) return {true, z, scaled_norm(mults, z, f)};

    std::vector<T> r(z.size() + 1);
    r[0] = T(-1.0);
    std::copy(z.begin(), z.end(), r.begin() + 1);
    std::vector<T> jac = detail::system_jacobian_t<T>(mults, r, sig);

    Mat J(len, nz);
    Vec F(len);
    for (std::size_t i = 0; i < len; ++i) {
      F(i) = f[i];
      for (std::size_t t = 0; t < nz; ++t) J(i, t) = jac[i * len + (t + 1)];
    }
    Vec delta = J.colPivHouseholderQr().solve(-F);
    bool finite = true;
    for (std::size_t t = 0; t < nz; ++t)
      if (!std::isfinite(abs_of(delta(t)))) finite = false;
    if (!finite) break;

    double alpha = 1.0;
    bool accepted = false;
    std::vector<T> z_new, f_new;
    double fsq_new = 0.0;
    for (int bt = 0; bt <= cfg.max_backtracks; ++bt) {
      z_new = z;
      for (std::size_t t = 0; t < nz; ++t) z_new[t] += alpha * delta(t);
      f_new = residual_fixed(mults, sig, z_new);
      fsq_new = norm2sq(f_new);
      if (fsq_new < fsq * (1.0 - 1e-4 * alpha)) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;  // stalled at a stationary point of the least squares
    z = std::move(z_new);
    f = std::move(f_new);
    if (fsq - fsq_new <= 1e-15 * fsq) {
      fsq = fsq_new;
      break;
    }
    fsq = fsq_new;
  }
  double norm = scaled_norm(mults, z, f);
  return {norm <= cfg.tol, std::move(z), norm};
}

std::vector<double> make_start(std::size_t nz, int index, std::uint64_t seed) {
  static constexpr double kGrowth[8] = {1.3, 1.7, 2.2, 3.0, 4.0, 5.5, 7.5, 10.0};
  Rng rng(mix_seed(seed, static_cast<std::uint64_t>(index)));
  double base = std::ldexp(1.0, index % 8 - 3);  // 1/8 .. 16
  double growth = kGrowth[(index / 8) % 8];
  std::vector<double> z(nz);
  double cur = base * (0.5 + rng.uniform01());
  for (std::size_t i = 0; i < nz; ++i) {
    z[i] = cur;
    cur *= growth * (0.6 + 0.8 * rng.uniform01());
  }
  return z;
}

bool is_ordered(const std::vector<double>& z) {
  double prev = 0.0;  // roots must satisfy -1 < 0 < z[0] < z[1] < ...
  for (double v : z) {
    if (!(v > prev)) return false;
    prev = v;
  }
  return true;
}

}  // namespace

const char* to_string(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::RealOrderedSolution: return "RealOrderedSolution";
    case SolveStatus::RealUnorderedSolution: return "RealUnorderedSolution";
    case SolveStatus::ComplexOnly: return "ComplexOnly";
    case SolveStatus::NoConvergence: return "NoConvergence";
  }
  return "Unknown";
}

SolveResult solve_system(std::span<const double> mults, std::span<const double> sigmas,
                         const SolveConfig& cfg) {
  check_solve_inputs(mults, sigmas, cfg);
  const std::size_t nz = mults.size() - 2;

  SolveResult result;
  std::vector<StartOutcome<double>> converged;
  for (int s = 0; s < cfg.starts; ++s) {
    ++result.starts_tried;
    auto outcome = run_start<double>(mults, sigmas, make_start(nz, s, cfg.seed), cfg);
    result.residual_norm = std::min(result.residual_norm, outcome.norm);
    if (outcome.converged) converged.push_back(std::move(outcome));
  }

  if (!converged.empty()) {
    // Worker-count-independent selection: ordered solutions first, then by
    // residual, then lexicographically by roots.
    std::sort(converged.begin(), converged.end(), [](const auto& a, const auto& b) {
      bool oa = is_ordered(a.z), ob = is_ordered(b.z);
      if (oa != ob) return oa;
      if (a.norm != b.norm) return a.norm < b.norm;
      return a.z < b.z;
    });
    const auto& best = converged.front();
    result.status = is_ordered(best.z) ? SolveStatus::RealOrderedSolution
                                       : SolveStatus::RealUnorderedSolution;
    result.roots.assign(1, -1.0);
    result.roots.insert(result.roots.end(), best.z.begin(), best.z.end());
    result.residual_norm = best.norm;
    return result;
  }

  // Diagnostic only: a complex-perturbed start converging while every real one
  // stalled suggests the solutions are complex.
  for (int s = 0; s < cfg.complex_starts; ++s) {
    ++result.starts_tried;
    Rng rng(mix_seed(cfg.seed ^ 0xc0ffee11ULL, static_cast<std::uint64_t>(s)));
    std::vector<double> zr = make_start(nz, s, cfg.seed ^ 0x5a5a5a5aULL);
    std::vector<Complex> z0(nz);
    for (std::size_t i = 0; i < nz; ++i)
      z0[i] = Complex(zr[i], zr[i] * rng.uniform(-0.5, 0.5));
    auto outcome = run_start<Complex>(mults, sigmas, std::move(z0), cfg);
    if (outcome.converged) {
      double max_im = 0.0, max_re = 1.0;
      for (const Complex& v : outcome.z) {
        max_im = std::max(max_im, std::abs(v.imag()));
        max_re = std::max(max_re, std::abs(v.real()));
      }
      if (max_im > 1e-7 * max_re) {
        result.status = SolveStatus::ComplexOnly;
        result.residual_norm = std::min(result.residual_norm, outcome.norm);
        return result;
      }
    }
  }
  result.status = SolveStatus::NoConvergence;
  return result;
}

bool no_solution_found(std::span<const double> mults, std::span<const double> sigmas,
                       const SolveConfig& cfg) {
  return solve_system(mults, sigmas, cfg).status == SolveStatus::NoConvergence;
}

bool degenerate_check(std::span<const double> mults, const SolveConfig& cfg) {
  std::vector<double> ones(mults.size() - 1, 1.0);
  return no_solution_found(mults, ones, cfg);
}

double q_eval(std::span<const double> mults, std::span<const double> sigmas) {
  if (sigmas.size() + 1 != mults.size())
    throw Error(ErrorCode::ArityMismatch,
                "expected one ratio fewer than multiplicities");
  if (mults.size() == 3) {
    double n = mults[0] + mults[1] + mults[2];
    return n * (1.0 - sigmas[0]) * sigmas[1] - mults[1];
  }
  if (mults.size() == 4) {
    n4::Candidate c{sigmas[0], sigmas[1], sigmas[2],
                    {mults[0], mults[1], mults[2], mults[3]}};
    return n4::r_eval(c);
  }
  throw Error(ErrorCode::UnsupportedArity,
              "membership polynomial known for N = 3 and N = 4 only");
}

namespace {

struct PairState {
  std::vector<double> a;  // free roots of p: (r3, ..., rN), ascending, > 0
  std::vector<double> b;  // free roots of q
};

double sup_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool tuple_valid(const std::vector<double>& z) {
  double prev = 0.0;
  for (double v : z) {
    if (!(v > prev + 1e-4)) return false;  // keep intervals solver-friendly
    prev = v;
  }
  return std::isfinite(z.back());
}

std::vector<double> random_tuple(Rng& rng, std::size_t k) {
  std::vector<double> z(k);
  double cur = std::exp(rng.uniform(std::log(0.05), std::log(3.0)));
  for (std::size_t i = 0; i < k; ++i) {
    z[i] = cur;
    cur += std::exp(rng.uniform(std::log(0.1), std::log(4.0)));
  }
  return z;
}

}  // namespace

ConjectureReport conjecture_search(int n_roots, std::span<const double> mults,
                                   const ConjectureConfig& cfg) {
  if (n_roots < 3 || static_cast<std::size_t>(n_roots) != mults.size())
    throw Error(ErrorCode::ConfigInvalid,
                "need N >= 3 and a multiplicity for each of the N roots");
  if (cfg.budget < 1 || !(cfg.min_root_separation > 0.0))
    throw Error(ErrorCode::ConfigInvalid, "budget >= 1 and positive separation required");
  for (double m : mults)
    if (!(m > 0.0) || !std::isfinite(m))
      throw Error(ErrorCode::NonPositiveMultiplicity, "multiplicities must be positive");

  const std::size_t k = static_cast<std::size_t>(n_roots) - 2;
  const double sep = cfg.min_root_separation;

  ConjectureReport rep;
  rep.n_roots = n_roots;
  rep.mults.assign(mults.begin(), mults.end());

  std::vector<double> mvec(mults.begin(), mults.end());
  auto sigmas_of = [&](const std::vector<double>& z) {
    std::vector<double> roots;
    roots.reserve(k + 2);
    roots.push_back(-1.0);
    roots.push_back(0.0);
    roots.insert(roots.end(), z.begin(), z.end());
    return ratio_vector(validate_instance(roots, mvec)).sigmas;
  };

  Rng rng(cfg.seed);
  PairState best;
  auto gap_of = [&](const PairState& ps) {
    ++rep.evaluations;
    auto sa = sigmas_of(ps.a);
    auto sb = sigmas_of(ps.b);
    return sup_dist(sa, sb);
  };

  // Exploration: random pairs, biased toward near-collisions just outside the
  // separation floor where a non-injectivity would show up first.
  const long long explore = std::max<long long>(1, cfg.budget * 2 / 5);
  while (rep.evaluations < explore) {
    PairState ps;
    ps.a = random_tuple(rng, k);
    ps.b = ps.a;
    std::size_t bumped = rng.below(k);
    for (std::size_t i = 0; i < k; ++i) {
      double amp = (i == bumped) ? sep * (1.0 + rng.uniform01()) : sep * rng.uniform01();
      ps.b[i] += (rng.uniform01() < 0.5 ? -1.0 : 1.0) * amp;
    }
    if (!tuple_valid(ps.b) || sup_dist(ps.a, ps.b) < sep) continue;
    double g = gap_of(ps);
    if (g < rep.best_gap) {
      rep.best_gap = g;
      best = ps;
    }
  }

  // Refinement: compass search over the joint coordinates with shrinking step,
  // rejecting moves that break ordering or the separation floor.
  double eta = 4.0 * sep;
  while (rep.evaluations < cfg.budget && eta > 1e-7) {
    bool improved = false;
    for (std::size_t c = 0; c < 2 * k && rep.evaluations < cfg.budget; ++c) {
      for (double sgn : {1.0, -1.0}) {
        if (rep.evaluations >= cfg.budget) break;
        PairState trial = best;
        std::vector<double>& side = c < k ? trial.a : trial.b;
        std::size_t i = c % k;
        side[i] += sgn * eta * std::max(0.1, std::abs(side[i]));
        if (!tuple_valid(trial.a) || !tuple_valid(trial.b) ||
            sup_dist(trial.a, trial.b) < sep)
          continue;
        double g = gap_of(trial);
        if (g < rep.best_gap) {
          rep.best_gap = g;
          best = trial;
          improved = true;
        }
      }
    }
    if (!improved) eta *= 0.5;
  }

  for (int side = 0; side < 2; ++side) {
    const std::vector<double>& z = side == 0 ? best.a : best.b;
    std::vector<double>& out = rep.best_pair[side];
    out.push_back(-1.0);
    out.push_back(0.0);
    out.insert(out.end(), z.begin(), z.end());
  }
  return rep;
}

}  // namespace ratiovec::general
