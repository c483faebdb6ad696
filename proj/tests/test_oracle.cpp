#include "trigsum/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace trigsum;

namespace {

constexpr double kQuarterPi = kPi / 4.0;
constexpr double kPhiMinusThree = 1.2735449654736897;

OracleOptions with_points(std::size_t points) {
  OracleOptions opts;
  opts.points = points;
  return opts;
}

}  // namespace

TEST(GridScan, ZeroSitsInTheGap) {
  const ScanReport r = grid_scan(0.0);
  EXPECT_GT(r.min_gap, 1.0);
  EXPECT_NEAR(r.min_gap, 2.0 * kSqrt2 - 1.0, 1e-6);
  EXPECT_TRUE(r.numeric_roots.empty());
}

TEST(GridScan, KnownSolutionHasNoGap) {
  const ScanReport r = grid_scan(-2.0);
  EXPECT_LE(r.min_gap, 1e-6);
  const double d = std::min(circular_distance(r.argmin, 3.0 * kQuarterPi),
                            circular_distance(r.argmin, 7.0 * kQuarterPi));
  EXPECT_LT(d, 1e-5);
}

TEST(GridScan, SixMissesByTheUpperBoundary) {
  const ScanReport r = grid_scan(6.0);
  EXPECT_NEAR(r.min_gap, 2.0 + 3.0 * kSqrt2 - 6.0, 1e-6);
  EXPECT_NEAR(r.argmin, kQuarterPi, 1e-5);
}

TEST(GridScan, CoarseGridStillSeesTheGap) {
  EXPECT_GT(grid_scan(0.0, with_points(1000)).min_gap, 1.0);
}

TEST(GridScan, RejectsBadOptions) {
  EXPECT_THROW(grid_scan(0.0, with_points(999)), std::invalid_argument);
  OracleOptions opts;
  opts.exclusion = 0.0;
  EXPECT_THROW(grid_scan(0.0, opts), std::invalid_argument);
}

TEST(RefineRoots, MinusTwo) {
  const auto roots = refine_roots(-2.0);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0], 3.0 * kQuarterPi, 1e-10);
  EXPECT_NEAR(roots[1], 7.0 * kQuarterPi, 1e-10);
}

TEST(RefineRoots, MinusThree) {
  const auto roots = refine_roots(-3.0);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0], kQuarterPi + kPhiMinusThree, 1e-10);
  EXPECT_NEAR(roots[1], kTwoPi + kQuarterPi - kPhiMinusThree, 1e-10);
}

TEST(RefineRoots, TangencyFoundByExtremumRefinement) {
  const double c = 1.0 - 2.0 * kSqrt2;
  const double phi = std::acos((1.0 - kSqrt2) / kSqrt2);
  const auto roots = refine_roots(c);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0], kQuarterPi + phi, 1e-9);
  EXPECT_NEAR(roots[1], kTwoPi + kQuarterPi - phi, 1e-9);
}

TEST(RefineRoots, TangencyIsOneRootAtEveryDensity) {
  const double c = 2.0 + 3.0 * kSqrt2;
  for (std::size_t points : {1000u, 1001u, 4096u, 12345u, 100000u, 777777u, 2000000u}) {
    const auto roots = refine_roots(c, with_points(points));
    ASSERT_EQ(roots.size(), 1u) << "points = " << points;
    EXPECT_NEAR(roots[0], kQuarterPi, 1e-9);
  }
}

TEST(RefineRoots, NearTangencyWithoutContactIsRejected) {
  // Just above the maximum 1 - 2 sqrt2: |F - c| dips below sqrt(tol) but never reaches 0.
  EXPECT_TRUE(refine_roots(1.0 - 2.0 * kSqrt2 + 1e-8).empty());
  EXPECT_TRUE(refine_roots(2.0 + 3.0 * kSqrt2 - 1e-8).empty());
}

TEST(RefineRoots, DensityDoublingMovesRootsByAtMostTol) {
  for (double c : {-3.0, 7.0, -2.1, 100.0}) {
    const auto coarse = refine_roots(c, with_points(200000));
    const auto fine = refine_roots(c, with_points(400000));
    ASSERT_EQ(coarse.size(), fine.size());
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      EXPECT_LE(std::abs(coarse[i] - fine[i]), OracleOptions{}.tol) << c;
    }
  }
}

TEST(Oracle, DeterministicAcrossWorkerCounts) {
  for (double c : {-3.0, 0.0, 2.0 + 3.0 * kSqrt2}) {
    OracleOptions one;
    one.workers = 1;
    OracleOptions three;
    three.workers = 3;
    const ScanReport a = grid_scan(c, one);
    const ScanReport b = grid_scan(c, three);
    EXPECT_EQ(a.min_gap, b.min_gap);
    EXPECT_EQ(a.argmin, b.argmin);
    EXPECT_EQ(refine_roots(c, one), refine_roots(c, three));
  }
}

TEST(Compare, ClosedFormAgreesWithNumeric) {
  const SolutionFamily fam = solve_integer(-3);
  EXPECT_TRUE(compare(fam, refine_roots(-3.0), 1e-8).matched);
}

TEST(Compare, RejectsQuotedMinusTwoFamily) {
  const std::vector<double> quoted{kQuarterPi, 7.0 * kQuarterPi};
  const auto numeric = refine_roots(-2.0);
  const Comparison cmp = compare(quoted, -2.0, numeric, 1e-8);
  EXPECT_FALSE(cmp.matched);
  ASSERT_EQ(cmp.unmatched_residues.size(), 1u);
  EXPECT_NEAR(cmp.unmatched_residues[0].angle, kQuarterPi, 1e-15);
  ASSERT_TRUE(cmp.unmatched_residues[0].residual.has_value());
  EXPECT_NEAR(*cmp.unmatched_residues[0].residual, 4.0 + 3.0 * kSqrt2, 1e-12);
  EXPECT_NE(cmp.describe().find("pi/4"), std::string::npos);

  const std::vector<double> derived{3.0 * kQuarterPi, 7.0 * kQuarterPi};
  EXPECT_TRUE(compare(derived, -2.0, numeric, 1e-8).matched);
}

TEST(Compare, EdgeCases) {
  EXPECT_TRUE(compare(std::vector<double>{}, 0.0, std::vector<double>{}, 1e-8).matched);
  // Matching is one-to-one: two residues cannot share one numeric root.
  const std::vector<double> twins{1.0, 1.0 + 1e-10};
  EXPECT_FALSE(compare(twins, 0.0, std::vector<double>{1.0}, 1e-8).matched);
  // Distances wrap around 2 pi.
  EXPECT_TRUE(compare(std::vector<double>{kTwoPi - 1e-10}, 0.0, std::vector<double>{1e-10},
                      1e-8)
                  .matched);
}

TEST(Oracle, AgreesWithClosedFormOnReferenceTargets) {
  for (double c : {-2.0, -3.0, -10.0, 7.0, 8.0, 100.0, 1.0 - 2.0 * kSqrt2, 2.0 + 3.0 * kSqrt2,
                   -5.5, 10.25}) {
    const SolutionFamily fam = solve_real(c);
    const ScanReport report = verify(fam, 1e-8);
    EXPECT_TRUE(report.matched) << "c = " << c << "\n"
                                << compare(fam, report.numeric_roots, 1e-8).describe();
    for (double x : report.numeric_roots) {
      EXPECT_GE(x, 0.0);
      EXPECT_LT(x, kTwoPi);
    }
  }
}

TEST(Certificate, NoSolutionBand) {
  for (std::int64_t n = -1; n <= 6; ++n) {
    const Certificate cert = no_solution_certificate(n);
    EXPECT_TRUE(cert.passed) << "n = " << n;
    EXPECT_EQ(cert.roots_found, 0u);
    EXPECT_NEAR(cert.min_gap, gap_distance(static_cast<double>(n)), 1e-3);
  }
  EXPECT_NEAR(no_solution_certificate(0).min_gap, 1.83, 5e-3);
  EXPECT_NEAR(no_solution_certificate(6).min_gap, 0.2426, 1e-4);
  EXPECT_NEAR(no_solution_certificate(-1).min_gap, 0.828, 1e-3);
  EXPECT_THROW(no_solution_certificate(7), std::out_of_range);
  EXPECT_THROW(no_solution_certificate(-2), std::out_of_range);
}

TEST(GapDistance, Values) {
  EXPECT_EQ(gap_distance(-2.0), 0.0);
  EXPECT_EQ(gap_distance(7.0), 0.0);
  EXPECT_NEAR(gap_distance(0.0), 2.0 * kSqrt2 - 1.0, 1e-15);
  EXPECT_NEAR(gap_distance(6.0), 3.0 * kSqrt2 - 4.0, 1e-14);
}
