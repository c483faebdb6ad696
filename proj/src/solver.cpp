#include "trigsum/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace trigsum {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

bool near(double x, double y, double tol) { return std::abs(x - y) <= tol; }

AdmissibleRoot make_root(double r, int multiplicity) {
  return {r, phi_of_root(r), multiplicity};
}

// Integer path: exact coefficients and an exact test for the spurious S = -1.
std::vector<AdmissibleRoot> admissible_integer(std::int64_t n) {
  const ExactQuadratic q = deflate_exact(reduce_exact(n));
  const std::int64_t d = q.discriminant();
  if (d < 0) {
    return {};
  }
  if (d == 0) {
    // m^2 + 2m - 7 has irrational zeros.
    throw CaseStructureViolation("integer target produced a double root");
  }
  std::vector<double> candidates = roots(q.to_real());
  if (q(-1) == 0) {
    const auto spurious = std::min_element(candidates.begin(), candidates.end(),
                                           [](double x, double y) {
                                             return std::abs(x + 1.0) < std::abs(y + 1.0);
                                           });
    candidates.erase(spurious);
  }
  std::vector<AdmissibleRoot> out;
  for (double r : candidates) {
    // +/-sqrt2 is irrational and 1 is never a zero (f(1) = 2).
    if (std::abs(r) < kSqrt2) {
      out.push_back(make_root(r, 1));
    }
  }
  return out;
}

std::vector<AdmissibleRoot> admissible_real(double c) {
  const Quadratic q = deflate(reduce(Target::real(c)));
  const double d = discriminant(q);
  const double band = kDoubleRootBand * (q.b() * q.b() + 4.0 * std::abs(q.a() * q.c()));

  std::vector<std::pair<double, int>> candidates;
  if (std::abs(d) <= band) {
    candidates.emplace_back(-q.b() / (2.0 * q.a()), 2);
  } else {
    for (double r : roots(q)) {
      candidates.emplace_back(r, 1);
    }
  }

  std::vector<AdmissibleRoot> out;
  for (auto [r, mult] : candidates) {
    if (near(r, -1.0, kResidueTol) || near(r, 1.0, kResidueTol)) {
      continue;
    }
    if (near(r, kSqrt2, kResidueTol)) {
      r = kSqrt2;
    } else if (near(r, -kSqrt2, kResidueTol)) {
      r = -kSqrt2;
    }
    if (std::abs(r) <= kSqrt2) {
      out.push_back(make_root(r, mult));
    }
  }
  return out;
}

void add_residue(std::vector<ResidueClass>& out, ResidueClass rc) {
  for (const ResidueClass& existing : out) {
    if (circular_distance(existing.offset, rc.offset) <= kResidueTol) {
      return;
    }
  }
  out.push_back(rc);
}

}  // namespace

double phi_of_root(double r) {
  if (!(std::abs(r) <= kSqrt2)) {
    throw std::out_of_range("S-root " + std::to_string(r) + " lies outside [-sqrt2, sqrt2]");
  }
  return std::acos(std::clamp(r / kSqrt2, -1.0, 1.0));
}

std::vector<AdmissibleRoot> admissible_roots(const Target& t) {
  if (t.is_integer()) {
    return admissible_integer(*t.integer_value());
  }
  return admissible_real(t.c());
}

SolutionFamily solve(const Target& t) {
  SolutionFamily fam{t, admissible_roots(t), {}};
  // cos(x - pi/4) = r / sqrt2  =>  x = pi/4 +/- phi (mod 2 pi)
  for (std::size_t i = 0; i < fam.roots.size(); ++i) {
    const double phi = fam.roots[i].phi;
    const int idx = static_cast<int>(i);
    const bool merged = phi <= kResidueTol || phi >= kPi - kResidueTol;
    if (merged) {
      add_residue(fam.residues, {normalize_angle(kQuarterPi + phi), idx, 0});
      continue;
    }
    add_residue(fam.residues, {normalize_angle(kQuarterPi + phi), idx, +1});
    add_residue(fam.residues, {normalize_angle(kQuarterPi - phi), idx, -1});
  }
  std::sort(fam.residues.begin(), fam.residues.end(),
            [](const ResidueClass& x, const ResidueClass& y) { return x.offset < y.offset; });
  return fam;
}

SolutionFamily solve_real(double c) { return solve(Target::real(c)); }

double theorem_r1(std::int64_t n) {
  const double nd = static_cast<double>(n);
  return (nd + 1.0 + std::sqrt(nd * nd - 2.0 * nd - 7.0)) / 2.0;
}

double theorem_r2(std::int64_t n) {
  const double nd = static_cast<double>(n);
  return (nd + 1.0 - std::sqrt(nd * nd - 2.0 * nd - 7.0)) / 2.0;
}

SolutionFamily solve_integer(std::int64_t n) {
  SolutionFamily fam = solve(Target::integer(n));

  const auto fail = [n](const std::string& what) {
    throw CaseStructureViolation("n = " + std::to_string(n) + ": " + what);
  };
  const bool expect_empty = n >= -1 && n <= 6;
  if (expect_empty != fam.empty()) {
    fail(expect_empty ? "expected no solution" : "expected a solution");
  }
  if (expect_empty) {
    return fam;
  }
  if (fam.roots.size() != 1) {
    fail("expected exactly one admissible S-root");
  }
  const double r = fam.roots.front().r;
  // The closed forms lose about log10|n| digits to cancellation.
  const double tol = 1e-12 * std::max(1.0, std::abs(static_cast<double>(n)));
  if (n == -2) {
    if (r != 0.0) fail("expected S = 0");
  } else if (n <= -3) {
    if (!near(r, theorem_r1(n), tol)) fail("selected root differs from r1");
  } else if (!near(r, theorem_r2(n), tol)) {
    fail("selected root differs from r2");
  }
  return fam;
}

std::vector<double> enumerate(const SolutionFamily& fam, std::int64_t k_lo, std::int64_t k_hi) {
  if (k_lo > k_hi) {
    throw std::invalid_argument("enumerate needs k_lo <= k_hi");
  }
  std::vector<double> out;
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    for (const ResidueClass& rc : fam.residues) {
      out.push_back(rc.offset + kTwoPi * static_cast<double>(k));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AbsSolutionSet solve_abs(double c, double bound) {
  if (!(bound > 0.0) || !std::isfinite(bound)) {
    throw std::invalid_argument("solve_abs needs a finite positive bound");
  }
  AbsSolutionSet out{solve_real(c), bound, {}, {}};
  if (out.family.empty()) {
    return out;
  }
  const auto k_hi = static_cast<std::int64_t>(std::floor(bound / kTwoPi));
  for (double y : enumerate(out.family, 0, k_hi)) {
    if (y > 0.0 && y <= bound) {
      out.positive.push_back(y);
    }
  }
  for (auto it = out.positive.rbegin(); it != out.positive.rend(); ++it) {
    out.values.push_back(-*it);
  }
  out.values.insert(out.values.end(), out.positive.begin(), out.positive.end());
  return out;
}

Thresholds thresholds() {
  // f_m(t) = t^2 + (m - 1) t + (2 - m) is affine in m; find where f_m(+/-sqrt2)
  // changes sign by evaluating the deflated quadratic at m = 0 and m = 1.
  const auto zero_in_m = [](double t) {
    const Quadratic q0 = deflate(reduce(Target::real(-0.0)));
    const Quadratic q1 = deflate(reduce(Target::real(-1.0)));
    const double intercept = q0(t);
    const double slope = q1(t) - intercept;
    return -intercept / slope;
  };
  return {
      zero_in_m(-kSqrt2),
      zero_in_m(kSqrt2),
      1.0 - 2.0 * kSqrt2,
      1.0 + 2.0 * kSqrt2,
      g_of_s(1.0 - kSqrt2),
      g_of_s(kSqrt2),
  };
}

}  // namespace trigsum
