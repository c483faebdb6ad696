#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trigsum/solver.hpp"

namespace trigsum {

/// Numerical cross-check of the closed form: scans F - c over one period
/// branch by branch, brackets sign changes, bisects them, and recovers
/// tangential roots (targets at a branch extremum) separately.
struct OracleOptions {
  std::size_t points = 1'000'000;  // grid points per period
  double exclusion = 1e-3;         // margin kept from the poles {K pi/2}
  double tol = 1e-12;              // bisection width
  unsigned workers = 4;            // threads; results do not depend on it
};

struct ScanReport {
  double target = 0.0;
  std::vector<double> numeric_roots;  // in [0, 2 pi), ascending
  double min_gap = 0.0;               // min |F - c| over the grid
  double argmin = 0.0;
  bool matched = false;
};

/// Fills min_gap / argmin only.
ScanReport grid_scan(double c, const OracleOptions& opts = {});

std::vector<double> refine_roots(double c, const OracleOptions& opts = {});

struct Mismatch {
  double angle;                   // in [0, 2 pi)
  std::optional<double> residual; // F(angle) - c when F is defined there
  double nearest;                 // circular distance to the closest counterpart
};

struct Comparison {
  bool matched = false;
  std::vector<Mismatch> unmatched_residues;
  std::vector<Mismatch> unmatched_numeric;

  std::string describe() const;
};

/// True iff the residues and the numeric roots pair up one-to-one within
/// `tol` (distance measured around the circle).
Comparison compare(std::span<const double> residues, double c, std::span<const double> numeric,
                   double tol);
Comparison compare(const SolutionFamily& fam, std::span<const double> numeric, double tol);

/// Closed form and oracle side by side.
ScanReport verify(const SolutionFamily& fam, double match_tol, const OracleOptions& opts = {});

/// Distance from c to the set of values F attains; zero outside the gap
/// (1 - 2 sqrt2, 2 + 3 sqrt2).
double gap_distance(double c);

/// Allowed shortfall of the measured gap below the analytic distance.
inline constexpr double kCertificateSlack = 1e-3;

struct Certificate {
  std::int64_t n;
  double min_gap;
  double argmin;
  double floor;  // gap_distance(n) - kCertificateSlack
  std::size_t roots_found;
  bool passed;
};

/// Numerical evidence that F(x) = n has no solution, for -1 <= n <= 6.
Certificate no_solution_certificate(std::int64_t n, const OracleOptions& opts = {});

}  // namespace trigsum
