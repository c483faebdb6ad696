#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "trigsum/oracle.hpp"

namespace trigsum::cli {

enum ExitCode : int { kOk = 0, kError = 1, kNoSolution = 2 };

/// Every command produces an envelope
///   {"command", "inputs", "status": ok|no_solution|error, "result" | "error"}
/// plus a human-readable rendering for --format text.
struct CommandResult {
  nlohmann::json envelope;
  std::string text;
  int exit_code = kOk;
};

struct SolveArgs {
  std::string target;
  bool integer_mode = false;
  std::int64_t k_lo = 0;
  std::int64_t k_hi = 0;
};

struct VerifyArgs {
  std::string target;
  double tol = 1e-8;
  std::size_t points = OracleOptions{}.points;
  double exclusion = OracleOptions{}.exclusion;
};

struct ScanArgs {
  std::string target;
  std::size_t points = OracleOptions{}.points;
  double exclusion = OracleOptions{}.exclusion;
};

struct ClassifyArgs {
  double a = 0, b = 0, c = 0, lo = 0, hi = 0;
  double boundary_tol = kBoundaryTol;
};

struct SamplesArgs {
  double from = 0, to = 0, step = 0;
  std::string out_path;
};

CommandResult cmd_solve(const SolveArgs& args);
CommandResult cmd_verify(const VerifyArgs& args);
CommandResult cmd_scan(const ScanArgs& args);
CommandResult cmd_classify(const ClassifyArgs& args);
CommandResult cmd_samples(const SamplesArgs& args);
CommandResult cmd_motivating();

/// Rebuilds the arguments of a solve from its echoed inputs.
SolveArgs solve_args_from(const nlohmann::json& inputs);

/// "A..B" -> (A, B). Throws std::invalid_argument.
std::pair<std::int64_t, std::int64_t> parse_k_range(const std::string& text);

/// Angle as {"radians", "decimal" (17 significant digits), "pi_multiple", "exact"?}.
nlohmann::json angle_json(double x, const std::string& exact = {});

/// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trigsum::cli
