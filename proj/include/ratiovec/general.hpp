#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ratiovec/core.hpp"

// General-N machinery: numerical solution of the root/ratio equation system
// for prescribed ratios, the all-ones degeneracy check, the known membership
// polynomials for N = 3 and N = 4, and the uniqueness search over pairs of
// normalized instances.
namespace ratiovec::general {

struct SolveConfig {
  double tol = 1e-8;        // scale-normalized residual target
  int max_iter = 80;        // Newton iterations per start
  int starts = 64;          // real multi-start count
  int complex_starts = 16;  // diagnostic complex starts when all real ones fail
  int max_backtracks = 30;  // step-halving limit per iteration
  std::uint64_t seed = 0;
};

enum class SolveStatus {
  RealOrderedSolution,    // r1 = -1 < 0 < r3 < ... < rN, residual below tol
  RealUnorderedSolution,  // real solution found, ordering violated
  ComplexOnly,            // only a complex-perturbed start converged (best effort)
  NoConvergence,          // every start stalled above tol
};

const char* to_string(SolveStatus status) noexcept;

struct SolveResult {
  SolveStatus status = SolveStatus::NoConvergence;
  std::vector<double> roots;  // (r1, r3, ..., rN) with r1 = -1; empty unless real solution
  double residual_norm = std::numeric_limits<double>::infinity();  // scale-normalized
  int starts_tried = 0;
};

/// Fixes the projective scale by r1 = -1 (r2 = 0 is implied throughout) and
/// damped-Newton solves the N-1 residuals in the N-2 free roots from
/// geometrically spaced multi-starts, classifying the best solution found.
/// Declaring "no solution" is a semi-decision: it means every start failed.
SolveResult solve_system(std::span<const double> mults, std::span<const double> sigmas,
                         const SolveConfig& cfg = {});

/// Solve with the given ratios and report whether no projective solution was
/// found. All the multi-start machinery of solve_system applies.
bool no_solution_found(std::span<const double> mults, std::span<const double> sigmas,
                       const SolveConfig& cfg = {});

/// All-ones ratios admit no projective solution for any multiplicities; this
/// runs the solver with sigmas = (1, ..., 1) and reports that emptiness.
bool degenerate_check(std::span<const double> mults, const SolveConfig& cfg = {});

/// The known membership polynomial evaluated at a candidate ratio vector:
/// n (1 - sigma1) sigma2 - m2 for N = 3, R(u, v, w) for N = 4. Zero on every
/// ratio vector. Other arities are unsupported.
double q_eval(std::span<const double> mults, std::span<const double> sigmas);

struct ConjectureConfig {
  long long budget = 10000;  // objective (pair-gap) evaluations
  std::uint64_t seed = 0;
  double min_root_separation = 1e-3;  // sup-norm distance kept between free-root tuples
};

struct ConjectureReport {
  int n_roots = 0;
  std::vector<double> mults;
  double best_gap = std::numeric_limits<double>::infinity();
  std::array<std::vector<double>, 2> best_pair;  // full root tuples (-1, 0, ...)
  long long evaluations = 0;
};

/// Randomized multi-start minimization of the sup-norm distance between the
/// ratio vectors of two instances sharing r1 = -1, r2 = 0 and the same mults,
/// with the free roots kept apart by min_root_separation. A gap bounded away
/// from zero is evidence of uniqueness; a near-zero gap flags a candidate
/// counterexample for inspection.
ConjectureReport conjecture_search(int n_roots, std::span<const double> mults,
                                   const ConjectureConfig& cfg = {});

}  // namespace ratiovec::general
