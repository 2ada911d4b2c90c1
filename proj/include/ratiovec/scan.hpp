#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "ratiovec/error.hpp"

namespace ratiovec::scan {

enum class Kind { Bounds, N3Monotonicity, T4 };

struct Spec {
  Kind kind = Kind::Bounds;
  // bounds
  int n_roots = 5;
  long long samples = 1000;
  // n3-monotonicity: a grid over (m1, m2, m3) with random r per cell
  double grid_min = 1.0;
  double grid_max = 5.0;
  int grid_count = 5;
  long long r_per_cell = 100;
  // shared
  std::uint64_t seed = 0;
  long long skip = 0;  // resume: emit rows [skip, total)
  bool json = false;   // default CSV
};

long long total_rows(const Spec& spec);

/// Runs the campaign and writes rows to `out`. Every row is a pure function of
/// (seed, row index), so resuming with skip and fanning out across workers
/// (capped by RATIOVEC_THREADS) cannot change the emitted bytes.
void run(const Spec& spec, std::ostream& out);

}  // namespace ratiovec::scan
