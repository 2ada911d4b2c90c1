#include "ratiovec/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

#include "ratiovec/bounds.hpp"
#include "ratiovec/json_io.hpp"
#include "ratiovec/n3.hpp"
#include "ratiovec/n4.hpp"
#include "ratiovec/rng.hpp"
#include "ratiovec/solver.hpp"

namespace ratiovec::scan {

namespace {

unsigned worker_count() {
  if (const char* env = std::getenv("RATIOVEC_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 8u);
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    row += io::csv_field(fields[i]);
  }
  return row;
}

struct ColumnSet {
  std::vector<std::string> names;
  std::vector<std::string> values;  // reused per row

  void put(double v) { values.push_back(io::fmt_double(v)); }
  void put(bool v) { values.push_back(v ? "true" : "false"); }
  void put(long long v) { values.push_back(std::to_string(v)); }
};

std::vector<std::string> header_for(const Spec& spec) {
  std::vector<std::string> h{"idx"};
  switch (spec.kind) {
    case Kind::Bounds: {
      int nn = spec.n_roots;
      for (int i = 1; i <= nn; ++i) h.push_back("root" + std::to_string(i));
      for (int i = 1; i <= nn; ++i) h.push_back("mult" + std::to_string(i));
      for (int i = 1; i < nn; ++i) h.push_back("sigma" + std::to_string(i));
      for (int i = 1; i < nn; ++i) h.push_back("lower" + std::to_string(i));
      for (int i = 1; i < nn; ++i) h.push_back("upper" + std::to_string(i));
      h.push_back("all_strictly_inside");
      break;
    }
    case Kind::N3Monotonicity:
      for (const char* c : {"m1", "m2", "m3", "r", "sigma1", "sigma2", "h", "h_sign",
                            "order_sign", "agree"})
        h.push_back(c);
      break;
    case Kind::T4:
      for (const char* c : {"m1", "m2", "m3", "m4", "t4_sufficient", "r3", "r4", "sigma1",
                            "sigma2", "sigma3", "monotone"})
        h.push_back(c);
      break;
  }
  return h;
}

void fill_bounds_row(const Spec& spec, long long idx, ColumnSet& cols) {
  Rng rng(mix_seed(spec.seed, static_cast<std::uint64_t>(idx)));
  int nn = spec.n_roots;
  std::vector<double> roots(nn), mults(nn);
  double cur = rng.uniform(-5.0, 5.0);
  for (int i = 0; i < nn; ++i) {
    roots[i] = cur;
    cur += rng.uniform(0.2, 3.0);
  }
  for (int i = 0; i < nn; ++i) mults[i] = rng.uniform(0.1, 10.0);
  PolyLike p = validate_instance(roots, mults);
  BoundsReport rep = check_bounds(ratio_vector(p));
  for (double v : roots) cols.put(v);
  for (double v : mults) cols.put(v);
  for (double v : rep.sigmas) cols.put(v);
  for (double v : rep.lower) cols.put(v);
  for (double v : rep.upper) cols.put(v);
  cols.put(rep.all_strictly_inside);
}

void fill_n3_row(const Spec& spec, long long idx, ColumnSet& cols) {
  long long cell = idx / spec.r_per_cell;
  int count = spec.grid_count;
  double step = count > 1 ? (spec.grid_max - spec.grid_min) / (count - 1) : 0.0;
  int i = static_cast<int>(cell / (count * count)) % count;
  int j = static_cast<int>(cell / count) % count;
  int l = static_cast<int>(cell % count);
  n3::Mults m{spec.grid_min + step * i, spec.grid_min + step * j, spec.grid_min + step * l};

  Rng rng(mix_seed(spec.seed, static_cast<std::uint64_t>(idx)));
  double r = 1.0 + std::pow(10.0, rng.uniform(-3.0, 3.0));
  n3::ClosedFormRatios cf = n3::closed_form_ratios(m, r);
  double h = n3::h_poly(m, r);
  double diff = cf.sigma2 - cf.sigma1;
  int h_sign = h > 0.0 ? 1 : (h < 0.0 ? -1 : 0);
  int order_sign = diff > 0.0 ? 1 : (diff < 0.0 ? -1 : 0);
  for (double v : m) cols.put(v);
  cols.put(r);
  cols.put(cf.sigma1);
  cols.put(cf.sigma2);
  cols.put(h);
  cols.put(static_cast<long long>(h_sign));
  cols.put(static_cast<long long>(order_sign));
  cols.put(h_sign == order_sign);
}

void fill_t4_row(const Spec& spec, long long idx, ColumnSet& cols) {
  Rng rng(mix_seed(spec.seed, static_cast<std::uint64_t>(idx)));
  n4::Mults m{};
  for (int tries = 0; tries < 100000; ++tries) {
    for (double& v : m) v = rng.uniform(0.1, 10.0);
    if (n4::t4_monotone_sufficient(m)) break;
  }
  double r3 = rng.uniform(0.2, 5.0);
  double r4 = r3 + rng.uniform(0.2, 5.0);
  std::vector<double> roots{-1.0, 0.0, r3, r4};
  std::vector<double> mults(m.begin(), m.end());
  RatioVector rv = ratio_vector(validate_instance(roots, mults));
  bool monotone = rv.sigmas[0] < rv.sigmas[1] && rv.sigmas[1] < rv.sigmas[2];
  for (double v : m) cols.put(v);
  cols.put(n4::t4_monotone_sufficient(m));
  cols.put(r3);
  cols.put(r4);
  for (double v : rv.sigmas) cols.put(v);
  cols.put(monotone);
}

std::string make_row(const Spec& spec, long long idx, const std::vector<std::string>& header) {
  ColumnSet cols;
  cols.values.reserve(header.size());
  cols.put(idx);
  switch (spec.kind) {
    case Kind::Bounds: fill_bounds_row(spec, idx, cols); break;
    case Kind::N3Monotonicity: fill_n3_row(spec, idx, cols); break;
    case Kind::T4: fill_t4_row(spec, idx, cols); break;
  }
  if (!spec.json) return join_csv(cols.values);

  io::JsonWriter w;
  w.begin_object();
  for (std::size_t i = 0; i < header.size(); ++i) {
    w.key(header[i]);
    const std::string& v = cols.values[i];
    if (v == "true" || v == "false")
      w.value(v == "true");
    else
      w.raw(v);
  }
  w.end_object();
  return w.str();
}

}  // namespace

long long total_rows(const Spec& spec) {
  switch (spec.kind) {
    case Kind::Bounds:
    case Kind::T4:
      return spec.samples;
    case Kind::N3Monotonicity: {
      long long cells = 1;
      for (int i = 0; i < 3; ++i) cells *= spec.grid_count;
      return cells * spec.r_per_cell;
    }
  }
  return 0;
}

void run(const Spec& spec, std::ostream& out) {
  if (spec.kind == Kind::Bounds && spec.n_roots < 2)
    throw Error(ErrorCode::SpecInvalid, "bounds scan needs n >= 2");
  if (spec.samples < 0 || spec.r_per_cell < 1 || spec.grid_count < 1 ||
      !(spec.grid_min > 0.0) || !(spec.grid_max >= spec.grid_min) || spec.skip < 0)
    throw Error(ErrorCode::SpecInvalid, "invalid scan parameters");

  const long long total = total_rows(spec);
  const long long first = std::min(spec.skip, total);
  const std::vector<std::string> header = header_for(spec);

  std::vector<std::string> rows(static_cast<std::size_t>(total - first));
  const unsigned workers =
      std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<long long>(
                                             1, total - first)));
  std::atomic<long long> next{first};
  auto work = [&]() {
    for (;;) {
      long long idx = next.fetch_add(1);
      if (idx >= total) return;
      rows[static_cast<std::size_t>(idx - first)] = make_row(spec, idx, header);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  if (spec.json) {
    out << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? ",\n" : "\n") << rows[i];
    out << "\n]\n";
  } else {
    out << join_csv(header) << "\n";
    for (const std::string& row : rows) out << row << "\n";
  }
}

}  // namespace ratiovec::scan
