#pragma once

#include <cstdint>
#include <vector>

#include "trigsum/reduction.hpp"
#include "trigsum/trig_core.hpp"

namespace trigsum {

/// Tolerance for merging residues and for snapping roots onto +/-1, +/-sqrt2.
inline constexpr double kResidueTol = 1e-12;

/// Relative width of the discriminant band treated as a double root for real
/// targets: |D| <= kDoubleRootBand * (b^2 + 4|ac|).
inline constexpr double kDoubleRootBand = 1e-12;

/// A value S = sin x + cos x can take, with phi = arccos(r / sqrt2).
struct AdmissibleRoot {
  double r;
  double phi;
  int multiplicity;  // 1 or 2
};

/// x = offset + 2 K pi. `root` indexes SolutionFamily::roots (-1 when the
/// residue was supplied from outside the solver) and `sign` records which
/// of pi/4 +/- phi produced it (0 when phi is 0 or pi and the pair merged).
struct ResidueClass {
  double offset;
  int root = -1;
  int sign = 0;
};

struct SolutionFamily {
  Target target;
  std::vector<AdmissibleRoot> roots;
  std::vector<ResidueClass> residues;  // ascending by offset

  bool empty() const noexcept { return residues.empty(); }
};

/// arccos(r / sqrt2) in [0, pi]. Throws std::out_of_range for |r| > sqrt2.
double phi_of_root(double r);

std::vector<AdmissibleRoot> admissible_roots(const Target& t);

SolutionFamily solve(const Target& t);
SolutionFamily solve_real(double c);

/// Thrown when an integer solve disagrees with the four-case theorem for
/// integer targets; indicates a defect, never a property of the input.
class CaseStructureViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Closed-form roots of t^2 + (m - 1) t + (2 - m) written in n = -m.
double theorem_r1(std::int64_t n);  // (n + 1 + sqrt(n^2 - 2n - 7)) / 2
double theorem_r2(std::int64_t n);  // (n + 1 - sqrt(n^2 - 2n - 7)) / 2

/// Solves F(x) = n and checks the integer case structure: no solution for
/// -1 <= n <= 6, S = 0 for n = -2, S = r1 for n <= -3, S = r2 for n >= 7.
SolutionFamily solve_integer(std::int64_t n);

/// All offset + 2 K pi with k_lo <= K <= k_hi, ascending.
std::vector<double> enumerate(const SolutionFamily& fam, std::int64_t k_lo, std::int64_t k_hi);

/// Solutions of F(|x|) = c with |x| <= bound.
struct AbsSolutionSet {
  SolutionFamily family;
  double bound;
  std::vector<double> positive;  // ascending, all > 0
  std::vector<double> values;    // ascending, closed under negation
};

AbsSolutionSet solve_abs(double c, double bound);

/// Target thresholds from the integer analysis.
struct Thresholds {
  double upper_m;        // (4 + sqrt2) / (1 + sqrt2)
  double lower_m;        // -(4 - sqrt2) / (sqrt2 - 1)
  double vertex_lo;      // 1 - 2 sqrt2
  double vertex_hi;      // 1 + 2 sqrt2
  double gap_lo;         // 1 - 2 sqrt2, largest value of F below the gap
  double gap_hi;         // 2 + 3 sqrt2, smallest value of F above the gap
};

Thresholds thresholds();

}  // namespace trigsum
