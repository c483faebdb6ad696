#include "trigsum/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace trigsum::cli {

using nlohmann::json;

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kSoundnessTol = 1e-9;

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
  return buf;
}

double parse_real(const std::string& text) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw std::invalid_argument("cannot parse '" + text + "' as a finite real number");
  }
  return value;
}

std::int64_t parse_integer(const std::string& text) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("cannot parse '" + text + "' as an integer");
  }
  return value;
}

json envelope(const std::string& command, json inputs) {
  return {{"command", command}, {"inputs", std::move(inputs)}};
}

CommandResult failure(json env, const std::string& message) {
  env["status"] = "error";
  env["error"] = message;
  return {std::move(env), "error: " + message + "\n", kError};
}

std::string residue_form(const SolutionFamily& fam, const ResidueClass& rc) {
  if (const auto exact = quarter_pi_form(rc.offset)) {
    return *exact;
  }
  if (rc.root < 0) {
    return {};
  }
  const std::string phi = "phi[" + std::to_string(rc.root) + "]";
  if (rc.sign == 0) {
    return "pi/4 + " + phi;
  }
  const double raw = kQuarterPi + rc.sign * fam.roots[rc.root].phi;
  std::string form = "pi/4 " + std::string(rc.sign > 0 ? "+ " : "- ") + phi;
  if (raw < 0.0) {
    form += " + 2pi";
  }
  return form;
}

json family_json(const SolutionFamily& fam, std::int64_t k_lo, std::int64_t k_hi) {
  json out;
  out["target"] = fam.target.c();
  out["m"] = fam.target.m();
  if (const auto n = fam.target.integer_value()) {
    const auto cubic = reduce_exact(*n);
    const auto quad = deflate_exact(cubic);
    out["reduced_cubic"] = cubic.coeffs;
    out["deflated_quadratic"] = quad.coeffs;
  } else {
    const auto cubic = reduce(fam.target);
    const Quadratic quad = deflate(cubic);
    out["reduced_cubic"] = cubic.coeffs;
    out["deflated_quadratic"] = {quad.a(), quad.b(), quad.c()};
  }
  out["roots"] = json::array();
  for (const AdmissibleRoot& r : fam.roots) {
    out["roots"].push_back(
        {{"r", r.r}, {"r_decimal", g17(r.r)}, {"phi", angle_json(r.phi)}, {"multiplicity", r.multiplicity}});
  }
  out["residues"] = json::array();
  for (const ResidueClass& rc : fam.residues) {
    out["residues"].push_back(angle_json(rc.offset, residue_form(fam, rc)));
  }
  out["period"] = "2pi";
  out["k_range"] = {k_lo, k_hi};
  out["solutions"] = json::array();
  for (double x : enumerate(fam, k_lo, k_hi)) {
    out["solutions"].push_back(angle_json(x));
  }
  return out;
}

std::string family_text(const SolutionFamily& fam) {
  std::ostringstream os;
  os << "F(x) = " << g17(fam.target.c()) << "\n";
  if (fam.empty()) {
    os << "no real solution\n";
    return os.str();
  }
  for (std::size_t i = 0; i < fam.roots.size(); ++i) {
    const AdmissibleRoot& r = fam.roots[i];
    os << "S-root r[" << i << "] = " << g17(r.r) << "  phi[" << i << "] = " << g17(r.phi)
       << (r.multiplicity == 2 ? "  (double root)" : "") << "\n";
  }
  os << "solutions: x = offset + 2K*pi with offset in\n";
  for (const ResidueClass& rc : fam.residues) {
    os << "  " << g17(rc.offset);
    const std::string form = residue_form(fam, rc);
    if (!form.empty()) os << "  = " << form;
    os << "\n";
  }
  return os.str();
}

// The n = -2 family that is sometimes quoted as x = 2K pi +/- pi/4.
json quoted_minus_two_form(const std::vector<double>& numeric, double tol) {
  const std::vector<double> quoted{kQuarterPi, -kQuarterPi};
  const Comparison cmp = compare(quoted, -2.0, numeric, tol);
  return {{"family", "x = 2K*pi +/- pi/4"}, {"matched", cmp.matched}, {"diagnostic", cmp.describe()}};
}

}  // namespace

json angle_json(double x, const std::string& exact) {
  json out{{"radians", x}, {"decimal", g17(x)}, {"pi_multiple", x / kPi}};
  if (!exact.empty()) {
    out["exact"] = exact;
  } else if (const auto q = quarter_pi_form(x)) {
    out["exact"] = *q;
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_k_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw std::invalid_argument("k-range must look like A..B");
  }
  const std::int64_t lo = parse_integer(text.substr(0, dots));
  const std::int64_t hi = parse_integer(text.substr(dots + 2));
  if (lo > hi) {
    throw std::invalid_argument("k-range needs A <= B");
  }
  return {lo, hi};
}

SolveArgs solve_args_from(const json& inputs) {
  SolveArgs args;
  args.target = inputs.at("target").get<std::string>();
  args.integer_mode = inputs.at("integer_mode").get<bool>();
  const auto& range = inputs.at("k_range");
  args.k_lo = range.at(0).get<std::int64_t>();
  args.k_hi = range.at(1).get<std::int64_t>();
  return args;
}

CommandResult cmd_solve(const SolveArgs& args) {
  json env = envelope("solve", {{"target", args.target},
                                {"integer_mode", args.integer_mode},
                                {"k_range", {args.k_lo, args.k_hi}}});
  try {
    if (args.k_lo > args.k_hi) {
      throw std::invalid_argument("k-range needs A <= B");
    }
    const SolutionFamily fam = args.integer_mode ? solve_integer(parse_integer(args.target))
                                                 : solve_real(parse_real(args.target));
    env["result"] = family_json(fam, args.k_lo, args.k_hi);
    env["status"] = fam.empty() ? "no_solution" : "ok";
    return {std::move(env), family_text(fam), fam.empty() ? kNoSolution : kOk};
  } catch (const std::exception& e) {
    return failure(std::move(env), e.what());
  }
}

CommandResult cmd_verify(const VerifyArgs& args) {
  json env = envelope("verify", {{"target", args.target},
                                 {"tol", args.tol},
                                 {"points", args.points},
                                 {"exclusion", args.exclusion}});
  try {
    if (!(args.tol > 0.0)) {
      throw std::invalid_argument("tol must be positive");
    }
    const double c = parse_real(args.target);
    OracleOptions opts;
    opts.points = args.points;
    opts.exclusion = args.exclusion;
    const SolutionFamily fam = solve_real(c);
    const ScanReport report = verify(fam, args.tol, opts);
    const Comparison cmp = compare(fam, report.numeric_roots, args.tol);

    json result = family_json(fam, 0, 0);
    result["numeric_roots"] = json::array();
    for (double x : report.numeric_roots) result["numeric_roots"].push_back(angle_json(x));
    result["min_gap"] = report.min_gap;
    result["argmin"] = angle_json(report.argmin);
    result["matched"] = report.matched;
    result["diagnostic"] = cmp.describe();

    std::ostringstream text;
    text << family_text(fam) << "numeric roots:";
    for (double x : report.numeric_roots) text << " " << g17(x);
    text << "\nmin |F - c| on grid: " << g17(report.min_gap) << "\n" << cmp.describe() << "\n";

    if (c == -2.0) {
      result["alternative_forms"] = json::array({quoted_minus_two_form(report.numeric_roots, args.tol)});
      text << "note: " << result["alternative_forms"][0]["family"].get<std::string>()
           << " does not solve F(x) = -2:\n"
           << result["alternative_forms"][0]["diagnostic"].get<std::string>();
    }
    env["result"] = std::move(result);
    if (!report.matched) {
      env["status"] = "error";
      env["error"] = "closed form and numeric roots disagree";
      return {std::move(env), text.str(), kError};
    }
    env["status"] = "ok";
    return {std::move(env), text.str(), kOk};
  } catch (const std::exception& e) {
    return failure(std::move(env), e.what());
  }
}

CommandResult cmd_scan(const ScanArgs& args) {
  json env = envelope("scan", {{"target", args.target},
                               {"points", args.points},
                               {"exclusion", args.exclusion}});
  try {
    const double c = parse_real(args.target);
    OracleOptions opts;
    opts.points = args.points;
    opts.exclusion = args.exclusion;
    const ScanReport report = grid_scan(c, opts);
    env["result"] = {{"target", c},
                     {"numeric_roots", json::array()},
                     {"min_gap", report.min_gap},
                     {"argmin", angle_json(report.argmin)},
                     {"gap_distance", gap_distance(c)}};
    env["status"] = "ok";
    std::ostringstream text;
    text << "min |F - " << g17(c) << "| = " << g17(report.min_gap) << " at x = "
         << g17(report.argmin) << "\n";
    return {std::move(env), text.str(), kOk};
  } catch (const std::exception& e) {
    return failure(std::move(env), e.what());
  }
}

CommandResult cmd_classify(const ClassifyArgs& args) {
  json env = envelope("classify", {{"a", args.a},
                                   {"b", args.b},
                                   {"c", args.c},
                                   {"lo", args.lo},
                                   {"hi", args.hi},
                                   {"boundary_tol", args.boundary_tol}});
  try {
    const Quadratic q(args.a, args.b, args.c);
    const Interval iv(args.lo, args.hi);
    const RootLocation loc = locate(q, iv, args.boundary_tol);
    const InsideConditions cond = inside_conditions(q, iv);
    const double product = q(iv.lo()) * q(iv.hi());

    json result;
    result["discriminant"] = discriminant(q);
    result["conditions"] = {{"positive_discriminant", cond.positive_discriminant},
                            {"endpoint_signs", cond.endpoint_signs},
                            {"vertex_inside", cond.vertex_inside}};
    result["both_roots_inside"] = both_roots_inside(q, iv);
    result["one_inside_one_outside"] = one_inside_one_outside(q, iv);
    result["endpoint_product_sign"] = (product > 0) - (product < 0);

    std::ostringstream text;
    if (std::holds_alternative<location::NoRealRoots>(loc)) {
      result["location"] = "no_real_roots";
      text << "no real roots\n";
    } else if (const auto* d = std::get_if<location::DoubleRoot>(&loc)) {
      result["location"] = "double_root";
      result["roots"] = {d->t};
      result["inside"] = d->inside;
      text << "double root " << g17(d->t) << (d->inside ? " inside" : " not inside") << "\n";
    } else {
      const auto& two = std::get<location::TwoRoots>(loc);
      const bool both_in =
          two.place1 == Placement::Inside && two.place2 == Placement::Inside;
      const bool split = (two.place1 == Placement::Inside) != (two.place2 == Placement::Inside) &&
                         two.place1 != Placement::OnBoundary && two.place2 != Placement::OnBoundary;
      result["location"] = both_in ? "both_inside" : split ? "one_inside_one_outside" : "two_roots";
      result["roots"] = {two.p1, two.p2};
      result["placements"] = {to_string(two.place1), to_string(two.place2)};
      text << "roots " << g17(two.p1) << " (" << to_string(two.place1) << "), " << g17(two.p2)
           << " (" << to_string(two.place2) << ")\n";
    }
    text << "conditions: D > 0 " << cond.positive_discriminant << ", a f(lo) > 0 and a f(hi) > 0 "
         << cond.endpoint_signs << ", lo < -b/2a < hi " << cond.vertex_inside
         << "; f(lo) f(hi) sign " << result["endpoint_product_sign"].get<int>() << "\n";
    env["result"] = std::move(result);
    env["status"] = "ok";
    return {std::move(env), text.str(), kOk};
  } catch (const std::exception& e) {
    return failure(std::move(env), e.what());
  }
}

CommandResult cmd_samples(const SamplesArgs& args) {
  json env = envelope("samples", {{"from", args.from},
                                  {"to", args.to},
                                  {"step", args.step},
                                  {"out", args.out_path}});
  try {
    if (!(args.step > 0.0) || !(args.from < args.to)) {
      throw std::invalid_argument("samples needs step > 0 and from < to");
    }
    std::ofstream csv(args.out_path);
    if (!csv) {
      throw std::runtime_error("cannot write " + args.out_path);
    }
    csv << "x_radians,f_value\n";
    // Tolerate rounding in (to - from) / step so the right end is included.
    const auto count = static_cast<std::size_t>(std::floor((args.to - args.from) / args.step + 1e-9)) + 1;
    std::size_t rows = 0;
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const Radians x(args.from + args.step * static_cast<double>(i));
      if (!classify_domain(x).valid()) {
        ++skipped;
        continue;
      }
      csv << g17(x.value()) << ',' << g17(eval_f(x)) << '\n';
      ++rows;
    }
    if (!csv) {
      throw std::runtime_error("write to " + args.out_path + " failed");
    }
    env["result"] = {{"rows", rows}, {"skipped", skipped}, {"path", args.out_path}};
    env["status"] = "ok";
    return {std::move(env),
            "wrote " + std::to_string(rows) + " rows to " + args.out_path + " (" +
                std::to_string(skipped) + " pole points skipped)\n",
            kOk};
  } catch (const std::exception& e) {
    return failure(std::move(env), e.what());
  }
}

CommandResult cmd_motivating() {
  constexpr double c = -3.0;
  const double bound = 4.0 * kPi;
  json env = envelope("motivating", {{"equation", "F(|x|) = -3"}, {"bound", bound}});
  try {
    const AbsSolutionSet set = solve_abs(c, bound);
    const SolutionFamily& fam = set.family;
    if (fam.roots.size() != 1) {
      throw std::logic_error("expected a single S-root for F(|x|) = -3");
    }
    const double phi = fam.roots.front().phi;

    json result;
    result["s_root"] = fam.roots.front().r;
    result["phi"] = angle_json(phi);
    result["cos_phi"] = std::cos(phi);
    result["branches"] = json::array({"x = +(2K*pi + pi/4 + phi)", "x = +(2K*pi + pi/4 - phi)",
                                      "x = -(2K*pi + pi/4 + phi)", "x = -(2K*pi + pi/4 - phi)"});
    result["solutions"] = json::array();

    std::ostringstream text;
    text << "F(|x|) = -3:  S = sqrt2 - 1, phi = arccos(S / sqrt2) = " << g17(phi) << "\n"
         << "x = +/-(2K*pi + pi/4 +/- phi), |x| <= 4pi:\n";
    bool all_verified = true;
    double worst = 0.0;
    for (double x : set.values) {
      const double y = std::abs(x);
      const double plus = y - (kQuarterPi + phi);
      const double minus = y - (kQuarterPi - phi);
      const bool is_plus = std::abs(plus / kTwoPi - std::round(plus / kTwoPi)) <
                           std::abs(minus / kTwoPi - std::round(minus / kTwoPi));
      const auto k = static_cast<std::int64_t>(std::round((is_plus ? plus : minus) / kTwoPi));
      const double residual = eval_f(Radians(y)) - c;
      const bool ok = std::abs(residual) <= kSoundnessTol;
      all_verified = all_verified && ok;
      worst = std::max(worst, std::abs(residual));
      const std::string branch = std::string(x < 0 ? "-" : "+") + "(2K*pi + pi/4 " +
                                 (is_plus ? "+" : "-") + " phi)";
      result["solutions"].push_back({{"x", angle_json(x)},
                                     {"branch", branch},
                                     {"K", k},
                                     {"f_abs_x", residual + c},
                                     {"verified", ok}});
      char line[160];
      std::snprintf(line, sizeof line, "  x = %+.17g  %-26s K = %lld  F(|x|) + 3 = %.3g\n", x,
                    branch.c_str(), static_cast<long long>(k), residual);
      text << line;
    }
    result["max_residual"] = worst;
    result["verified"] = all_verified;
    env["result"] = std::move(result);
    if (!all_verified) {
      env["status"] = "error";
      env["error"] = "a listed solution failed numeric verification";
      return {std::move(env), text.str(), kError};
    }
    env["status"] = "ok";
    return {std::move(env), text.str(), kOk};
  } catch (const std::exception& e) {
    return failure(std::move(env), e.what());
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form solver for sin x + cos x + tan x + cot x + sec x + csc x = c"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  SolveArgs solve;
  std::string k_range = "0..0";
  auto* solve_cmd = app.add_subcommand("solve", "Closed-form solution families of F(x) = c");
  solve_cmd->add_option("--target", solve.target, "Right-hand side c")->required();
  solve_cmd->add_flag("--integer-mode", solve.integer_mode,
                      "Require an integer target and check the integer case structure");
  solve_cmd->add_option("--k-range", k_range, "Enumerate x = offset + 2K*pi for K in A..B")
      ->capture_default_str();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the closed form with numeric roots");
  verify_cmd->add_option("--target", verify_args.target, "Right-hand side c")->required();
  verify_cmd->add_option("--tol", verify_args.tol, "Matching tolerance")->capture_default_str();
  verify_cmd->add_option("--points", verify_args.points, "Grid points per period")
      ->capture_default_str();
  verify_cmd->add_option("--exclusion", verify_args.exclusion, "Margin around poles")
      ->capture_default_str();

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Minimum of |F(x) - c| on a uniform grid");
  scan_cmd->add_option("--target", scan_args.target, "Right-hand side c")->required();
  scan_cmd->add_option("--points", scan_args.points, "Grid points per period")
      ->check(CLI::Range(std::size_t{1000}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  scan_cmd->add_option("--exclusion", scan_args.exclusion, "Margin around poles")
      ->capture_default_str();

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Locate the roots of a t^2 + b t + c in (lo, hi)");
  classify_cmd->add_option("a", classify_args.a)->required();
  classify_cmd->add_option("b", classify_args.b)->required();
  classify_cmd->add_option("c", classify_args.c)->required();
  classify_cmd->add_option("lo", classify_args.lo)->required();
  classify_cmd->add_option("hi", classify_args.hi)->required();
  classify_cmd->add_option("--boundary-tol", classify_args.boundary_tol)->capture_default_str();

  SamplesArgs samples_args;
  auto* samples_cmd = app.add_subcommand("samples", "Write x, F(x) pairs as CSV");
  samples_cmd->add_option("--from", samples_args.from)->required();
  samples_cmd->add_option("--to", samples_args.to)->required();
  samples_cmd->add_option("--step", samples_args.step)->required();
  samples_cmd->add_option("--out", samples_args.out_path)->required();

  auto* motivating_cmd = app.add_subcommand("motivating", "Solve F(|x|) = -3 for |x| <= 4pi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  CommandResult result;
  if (*solve_cmd) {
    try {
      std::tie(solve.k_lo, solve.k_hi) = parse_k_range(k_range);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kError;
    }
    result = cmd_solve(solve);
  } else if (*verify_cmd) {
    result = cmd_verify(verify_args);
  } else if (*scan_cmd) {
    result = cmd_scan(scan_args);
  } else if (*classify_cmd) {
    result = cmd_classify(classify_args);
  } else if (*samples_cmd) {
    result = cmd_samples(samples_args);
  } else if (*motivating_cmd) {
    result = cmd_motivating();
  }

  if (format == "json") {
    out << result.envelope.dump(2) << "\n";
  } else {
    (result.exit_code == kError ? err : out) << result.text;
  }
  return result.exit_code;
}

}  // namespace trigsum::cli
