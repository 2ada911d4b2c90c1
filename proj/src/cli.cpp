#include "ratiovec/cli.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "ratiovec/bounds.hpp"
#include "ratiovec/general.hpp"
#include "ratiovec/json_io.hpp"
#include "ratiovec/n3.hpp"
#include "ratiovec/n4.hpp"
#include "ratiovec/scan.hpp"
#include "ratiovec/solver.hpp"

namespace ratiovec::cli {

namespace {

// ---------------------------------------------------------------- expressions

struct ExprParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit ExprParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorCode::SpecInvalid,
                "bad numeric expression \"" + s + "\" at offset " + std::to_string(pos) +
                    ": " + what);
  }

  double parse_expr() {
    double v = parse_term();
    for (;;) {
      if (eat('+'))
        v += parse_term();
      else if (eat('-'))
        v -= parse_term();
      else
        return v;
    }
  }

  double parse_term() {
    double v = parse_unary();
    for (;;) {
      if (eat('*'))
        v *= parse_unary();
      else if (eat('/'))
        v /= parse_unary();
      else
        return v;
    }
  }

  double parse_unary() {
    if (eat('-')) return -parse_unary();
    return parse_primary();
  }

  double parse_primary() {
    skip_ws();
    if (eat('(')) {
      double v = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (s.compare(pos, 4, "sqrt") == 0) {
      pos += 4;
      if (!eat('(')) fail("expected '(' after sqrt");
      double v = parse_expr();
      if (!eat(')')) fail("expected ')'");
      if (v < 0.0) fail("sqrt of a negative value");
      return std::sqrt(v);
    }
    if (s.compare(pos, 2, "pi") == 0) {
      pos += 2;
      return 3.14159265358979323846;
    }
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' ||
            s[pos] == 'e' || s[pos] == 'E' ||
            ((s[pos] == '+' || s[pos] == '-') && pos > start &&
             (s[pos - 1] == 'e' || s[pos - 1] == 'E'))))
      ++pos;
    if (pos == start) fail("expected a number");
    try {
      return std::stod(s.substr(start, pos - start));
    } catch (const std::exception&) {
      fail("unparseable number");
    }
  }

  double run() {
    double v = parse_expr();
    skip_ws();
    if (pos != s.size()) fail("trailing characters");
    return v;
  }
};

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    out.push_back(parse_number_expr(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// ------------------------------------------------------------------ reporting

struct Output {
  std::string path;  // empty = stdout
  bool quiet = false;

  void emit(const std::string& text, std::ostream& out) const {
    if (quiet) return;
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::SpecInvalid, "cannot open output file: " + path);
    f << text;
  }
};

void add_common(CLI::App* cmd, Output* output) {
  cmd->add_option("--output", output->path, "write the report to a file instead of stdout");
  cmd->add_flag("--quiet", output->quiet, "suppress the report (exit code only)");
}

void write_instance_fields(io::JsonWriter& w, std::span<const double> roots,
                           std::span<const double> mults) {
  w.key("roots").value(roots);
  w.key("mults").value(mults);
}

int verdict_exit(bool v) { return v ? kExitTrue : kExitFalse; }

n3::Mults to_m3(const std::vector<double>& m) {
  if (m.size() != 3) throw Error(ErrorCode::ArityMismatch, "expected 3 multiplicities");
  return {m[0], m[1], m[2]};
}

n4::Mults to_m4(const std::vector<double>& m) {
  if (m.size() != 4) throw Error(ErrorCode::ArityMismatch, "expected 4 multiplicities");
  return {m[0], m[1], m[2], m[3]};
}

// ---------------------------------------------------------------- subcommands

struct Args {
  std::string input;
  std::string mults;
  std::string sigmas;
  std::string format;
  double tol = -1.0;  // negative = use the per-command default
  double sigma1 = 0.0;
  std::uint64_t seed = 0;
  long long budget = 10000;
  int n_roots = 0;
  Output output;
};

int cmd_ratios(const Args& a, std::ostream& out) {
  io::Instance inst = io::load_instance_file(a.input);
  RatioVector rv = ratio_vector(validate_instance(inst.roots, inst.mults));
  io::JsonWriter w;
  w.begin_object();
  write_instance_fields(w, inst.roots, inst.mults);
  w.key("sigmas").value(rv.sigmas);
  w.key("critical_points").value(rv.critical_points);
  w.end_object();
  a.output.emit(w.str() + "\n", out);
  return kExitTrue;
}

int cmd_bounds(const Args& a, std::ostream& out) {
  io::Instance inst = io::load_instance_file(a.input);
  RatioVector rv = ratio_vector(validate_instance(inst.roots, inst.mults));
  BoundsReport rep = check_bounds(rv);
  io::JsonWriter w;
  w.begin_object();
  write_instance_fields(w, inst.roots, inst.mults);
  w.key("sigmas").value(rep.sigmas);
  w.key("lower").value(rep.lower);
  w.key("upper").value(rep.upper);
  w.key("all_strictly_inside").value(rep.all_strictly_inside);
  w.end_object();
  a.output.emit(w.str() + "\n", out);
  return verdict_exit(rep.all_strictly_inside);
}

int cmd_n3_check(const Args& a, std::ostream& out) {
  n3::Mults m = to_m3(parse_number_list(a.mults));
  std::vector<double> sig = parse_number_list(a.sigmas);
  if (sig.size() != 2) throw Error(ErrorCode::ArityMismatch, "expected 2 ratios");
  double tol = a.tol > 0.0 ? a.tol : 1e-9;
  n3::Verdict v = n3::is_ratio_vector(m, sig[0], sig[1], tol);
  io::JsonWriter w;
  w.begin_object();
  w.key("mults").value(std::span<const double>(m.data(), m.size()));
  w.key("sigma1").value(sig[0]);
  w.key("sigma2").value(sig[1]);
  w.key("is_ratio_vector").value(v.is_ratio_vector);
  w.key("relation_residual").value(v.relation_residual);
  w.key("bounds_ok").value(v.bounds_ok);
  w.end_object();
  a.output.emit(w.str() + "\n", out);
  return verdict_exit(v.is_ratio_vector);
}

int cmd_n3_invert(const Args& a, std::ostream& out) {
  n3::Mults m = to_m3(parse_number_list(a.mults));
  double r = n3::root_from_sigma1(m, a.sigma1);
  double s2 = n3::sigma2_from_sigma1(m, a.sigma1);
  io::JsonWriter w;
  w.begin_object();
  w.key("mults").value(std::span<const double>(m.data(), m.size()));
  w.key("sigma1").value(a.sigma1);
  w.key("sigma2").value(s2);
  w.key("r").value(r);
  double roots[3] = {0.0, 1.0, r};
  w.key("roots").value(std::span<const double>(roots, 3));
  w.end_object();
  a.output.emit(w.str() + "\n", out);
  return kExitTrue;
}

int cmd_n3_classify(const Args& a, std::ostream& out) {
  n3::Mults m = to_m3(parse_number_list(a.mults));
  n3::MonotonicityVerdict v = n3::classify_monotonicity(m);
  std::optional<double> witness;
  if (!v.always_sigma1_lt_sigma2) witness = n3::find_order_violation(m);
  io::JsonWriter w;
  w.begin_object();
  w.key("mults").value(std::span<const double>(m.data(), m.size()));
  w.key("always").value(v.always_sigma1_lt_sigma2);
  w.key("A").value(v.condition_a);
  w.key("B").value(v.condition_b);
  w.key("C").value(v.condition_c);
  w.key("counterexample_r");
  if (witness)
    w.value(*witness);
  else
    w.null();
  w.end_object();
  a.output.emit(w.str() + "\n", out);
  return verdict_exit(v.always_sigma1_lt_sigma2);
}

n4::Candidate make_candidate(const Args& a) {
  n4::Mults m = to_m4(parse_number_list(a.mults));
  std::vector<double> sig = parse_number_list(a.sigmas);
  if (sig.size() != 3) throw Error(ErrorCode::ArityMismatch, "expected 3 ratios");
  return n4::Candidate{sig[0], sig[1], sig[2], m};
}

void write_membership(io::JsonWriter& w, const n4::Candidate& c,
                      const n4::MembershipReport& rep) {
  w.begin_object();
  w.key("mults").value(std::span<const double>(c.m.data(), c.m.size()));
  w.key("u").value(c.u);
  w.key("v").value(c.v);
  w.key("w").value(c.w);
  w.key("D").value(rep.d);
  w.key("D1").value(rep.d1);
  w.key("D2").value(rep.d2);
  w.key("R").value(rep.r_value);
  w.key("order_ok").value(rep.order_ok);
  w.key("bounds_ok").value(rep.bounds_ok);
  w.key("verdict").value(rep.verdict);
  w.key("r");
  rep.r ? w.value(*rep.r) : w.null();
  w.key("s");
  rep.s ? w.value(*rep.s) : w.null();
  w.end_object();
}

int cmd_n4_member(const Args& a, std::ostream& out) {
  n4::Candidate c = make_candidate(a);
  double tol = a.tol > 0.0 ? a.tol : 1e-7;
  n4::MembershipReport rep = n4::membership(c, tol);
  io::JsonWriter w;
  write_membership(w, c, rep);
  a.output.emit(w.str() + "\n", out);
  return verdict_exit(rep.verdict);
}

int cmd_n4_reconstruct(const Args& a, std::ostream& out) {
  n4::Candidate c = make_candidate(a);
  double tol = a.tol > 0.0 ? a.tol : 1e-7;
  n4::MembershipReport rep = n4::membership(c, tol);
  io::JsonWriter w;
  write_membership(w, c, rep);
  a.output.emit(w.str() + "\n", out);
  return verdict_exit(rep.verdict);  // non-members report verdict false
}

int cmd_n4_t4(const Args& a, std::ostream& out) {
  n4::Mults m = to_m4(parse_number_list(a.mults));
  bool suff = n4::t4_monotone_sufficient(m);
  io::JsonWriter w;
  w.begin_object();
  w.key("mults").value(std::span<const double>(m.data(), m.size()));
  w.key("sufficient").value(suff);
  w.end_object();
  a.output.emit(w.str() + "\n", out);
  return verdict_exit(suff);
}

int cmd_solve(const Args& a, std::ostream& out) {
  std::vector<double> m = parse_number_list(a.mults);
  std::vector<double> sig = parse_number_list(a.sigmas);
  general::SolveConfig cfg;
  if (a.tol > 0.0) cfg.tol = a.tol;
  cfg.seed = a.seed;
  general::SolveResult res = general::solve_system(m, sig, cfg);
  io::JsonWriter w;
  w.begin_object();
  w.key("mults").value(std::span<const double>(m));
  w.key("sigmas").value(std::span<const double>(sig));
  w.key("status").value(general::to_string(res.status));
  w.key("roots");
  if (res.roots.empty())
    w.null();
  else
    w.value(std::span<const double>(res.roots));
  w.key("residual_norm").value(res.residual_norm);
  w.key("starts_tried").value(static_cast<long long>(res.starts_tried));
  w.end_object();
  a.output.emit(w.str() + "\n", out);
  bool found = res.status == general::SolveStatus::RealOrderedSolution ||
               res.status == general::SolveStatus::RealUnorderedSolution;
  return verdict_exit(found);
}

int cmd_degenerate(const Args& a, std::ostream& out) {
  std::vector<double> m = parse_number_list(a.mults);
  general::SolveConfig cfg;
  if (a.tol > 0.0) cfg.tol = a.tol;
  cfg.seed = a.seed;
  bool degenerate = general::degenerate_check(m, cfg);
  io::JsonWriter w;
  w.begin_object();
  w.key("mults").value(std::span<const double>(m));
  w.key("degenerate").value(degenerate);
  w.end_object();
  a.output.emit(w.str() + "\n", out);
  return verdict_exit(degenerate);
}

int cmd_conjecture(const Args& a, std::ostream& out) {
  std::vector<double> m = parse_number_list(a.mults);
  general::ConjectureConfig cfg;
  cfg.budget = a.budget;
  cfg.seed = a.seed;
  int n = a.n_roots > 0 ? a.n_roots : static_cast<int>(m.size());
  general::ConjectureReport rep = general::conjecture_search(n, m, cfg);
  io::JsonWriter w;
  w.begin_object();
  w.key("n").value(static_cast<long long>(rep.n_roots));
  w.key("mults").value(std::span<const double>(rep.mults));
  w.key("best_gap").value(rep.best_gap);
  w.key("best_pair").begin_array();
  w.value(std::span<const double>(rep.best_pair[0]));
  w.value(std::span<const double>(rep.best_pair[1]));
  w.end_array();
  w.key("evaluations").value(rep.evaluations);
  w.end_object();
  a.output.emit(w.str() + "\n", out);
  return kExitTrue;
}

int classify_error(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ConvergenceFailure:
    case ErrorCode::NegativeDiscriminant:
    case ErrorCode::DegenerateDenominator:
      return kExitNumerical;
    default:
      return kExitInput;
  }
}

}  // namespace

double parse_number_expr(const std::string& text) { return ExprParser(text).run(); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ratio vectors of polynomial-like functions"};
  app.require_subcommand(1);

  Args a;
  scan::Spec scan_spec;
  std::string scan_kind = "bounds";
  std::function<int()> action;

  auto* ratios = app.add_subcommand("ratios", "compute the ratio vector of an instance");
  ratios->add_option("--input", a.input, "instance JSON file")->required();
  add_common(ratios, &a.output);
  ratios->callback([&] { action = [&] { return cmd_ratios(a, out); }; });

  auto* bounds = app.add_subcommand("bounds", "check the per-ratio bounds");
  bounds->add_option("--input", a.input, "instance JSON file")->required();
  add_common(bounds, &a.output);
  bounds->callback([&] { action = [&] { return cmd_bounds(a, out); }; });

  auto* n3cmd = app.add_subcommand("n3", "N = 3 characterization");
  n3cmd->require_subcommand(1);
  auto* n3check = n3cmd->add_subcommand("check", "membership test for (sigma1, sigma2)");
  n3check->add_option("--mults", a.mults, "m1,m2,m3 (expressions allowed)")->required();
  n3check->add_option("--sigmas", a.sigmas, "sigma1,sigma2")->required();
  n3check->add_option("--tol", a.tol, "relation tolerance (default 1e-9)");
  add_common(n3check, &a.output);
  n3check->callback([&] { action = [&] { return cmd_n3_check(a, out); }; });

  auto* n3invert = n3cmd->add_subcommand("invert", "construct the instance from sigma1");
  n3invert->add_option("--mults", a.mults)->required();
  n3invert->add_option("--sigma1", a.sigma1)->required();
  add_common(n3invert, &a.output);
  n3invert->callback([&] { action = [&] { return cmd_n3_invert(a, out); }; });

  auto* n3classify = n3cmd->add_subcommand("classify", "is sigma1 < sigma2 for all roots?");
  n3classify->add_option("--mults", a.mults)->required();
  add_common(n3classify, &a.output);
  n3classify->callback([&] { action = [&] { return cmd_n3_classify(a, out); }; });

  auto* n4cmd = app.add_subcommand("n4", "N = 4 characterization");
  n4cmd->require_subcommand(1);
  auto* n4member = n4cmd->add_subcommand("member", "membership test for (u, v, w)");
  n4member->add_option("--mults", a.mults, "m1,m2,m3,m4 (expressions allowed)")->required();
  n4member->add_option("--sigmas", a.sigmas, "u,v,w")->required();
  n4member->add_option("--tol", a.tol, "membership tolerance (default 1e-7)");
  add_common(n4member, &a.output);
  n4member->callback([&] { action = [&] { return cmd_n4_member(a, out); }; });

  auto* n4rec = n4cmd->add_subcommand("reconstruct", "recover the roots (r, s)");
  n4rec->add_option("--mults", a.mults)->required();
  n4rec->add_option("--sigmas", a.sigmas)->required();
  n4rec->add_option("--tol", a.tol);
  add_common(n4rec, &a.output);
  n4rec->callback([&] { action = [&] { return cmd_n4_reconstruct(a, out); }; });

  auto* n4t4 = n4cmd->add_subcommand("t4", "monotonicity sufficient condition");
  n4t4->add_option("--mults", a.mults)->required();
  add_common(n4t4, &a.output);
  n4t4->callback([&] { action = [&] { return cmd_n4_t4(a, out); }; });

  auto* solve = app.add_subcommand("solve", "solve the equation system for given ratios");
  solve->add_option("--mults", a.mults)->required();
  solve->add_option("--sigmas", a.sigmas)->required();
  solve->add_option("--tol", a.tol, "residual tolerance (default 1e-8)");
  solve->add_option("--seed", a.seed, "multi-start seed");
  add_common(solve, &a.output);
  solve->callback([&] { action = [&] { return cmd_solve(a, out); }; });

  auto* degen = app.add_subcommand("degenerate", "all-ones ratios: solvable for any roots?");
  degen->add_option("--mults", a.mults)->required();
  degen->add_option("--tol", a.tol);
  degen->add_option("--seed", a.seed);
  add_common(degen, &a.output);
  degen->callback([&] { action = [&] { return cmd_degenerate(a, out); }; });

  auto* conj = app.add_subcommand("conjecture", "search for ratio-vector collisions");
  conj->add_option("--n", a.n_roots, "number of roots N");
  conj->add_option("--mults", a.mults)->required();
  conj->add_option("--budget", a.budget, "objective evaluation budget (default 10000)");
  conj->add_option("--seed", a.seed);
  add_common(conj, &a.output);
  conj->callback([&] { action = [&] { return cmd_conjecture(a, out); }; });

  auto* scancmd = app.add_subcommand("scan", "parameter-scan campaigns (CSV by default)");
  scancmd->add_option("--kind", scan_kind, "bounds | n3-monotonicity | t4")->required();
  scancmd->add_option("--n", scan_spec.n_roots, "instance size for bounds scans");
  scancmd->add_option("--samples", scan_spec.samples, "sample count (bounds, t4)");
  scancmd->add_option("--grid-min", scan_spec.grid_min, "m grid minimum (n3-monotonicity)");
  scancmd->add_option("--grid-max", scan_spec.grid_max, "m grid maximum");
  scancmd->add_option("--grid-count", scan_spec.grid_count, "m grid points per axis");
  scancmd->add_option("--r-per-cell", scan_spec.r_per_cell, "random r draws per grid cell");
  scancmd->add_option("--seed", scan_spec.seed);
  scancmd->add_option("--skip", scan_spec.skip, "resume: skip the first K rows");
  scancmd->add_option("--format", a.format, "csv (default) or json");
  add_common(scancmd, &a.output);
  scancmd->callback([&] {
    action = [&] {
      if (scan_kind == "bounds")
        scan_spec.kind = scan::Kind::Bounds;
      else if (scan_kind == "n3-monotonicity")
        scan_spec.kind = scan::Kind::N3Monotonicity;
      else if (scan_kind == "t4")
        scan_spec.kind = scan::Kind::T4;
      else
        throw Error(ErrorCode::SpecInvalid, "unknown scan kind: " + scan_kind);
      if (!a.format.empty() && a.format != "csv" && a.format != "json")
        throw Error(ErrorCode::SpecInvalid, "scan format must be csv or json");
      scan_spec.json = a.format == "json";
      std::ostringstream buf;
      scan::run(scan_spec, buf);
      a.output.emit(buf.str(), out);
      return kExitTrue;
    };
  });

  // Reports are JSON; --format exists on the other subcommands for symmetry
  // but only "json" is accepted there.
  for (CLI::App* cmd : {ratios, bounds, n3check, n3invert, n3classify, n4member, n4rec,
                        n4t4, solve, degen, conj})
    cmd->add_option("--format", a.format, "json (default)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitTrue;
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (!a.format.empty() && a.format != "json" && !scancmd->parsed())
      throw Error(ErrorCode::SpecInvalid, "only JSON reports are supported here");
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return classify_error(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace ratiovec::cli
