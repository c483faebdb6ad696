#include "trigsum/quadratic_locator.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace trigsum;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// A quadratic built from prescribed roots, so membership can be decided
// without solving anything.
struct Planted {
  Quadratic q;
  std::vector<double> roots;  // empty when complex
};

bool inside(double t, const Interval& iv) { return t > iv.lo() && t < iv.hi(); }

double distance_to_ends(double t, const Interval& iv) {
  return std::min(std::abs(t - iv.lo()), std::abs(t - iv.hi()));
}

Planted random_planted(std::mt19937_64& rng, const Interval& iv) {
  std::uniform_real_distribution<double> pos(-4.0, 4.0);
  std::uniform_real_distribution<double> lead(0.1, 10.0);
  std::bernoulli_distribution flip(0.5);
  std::bernoulli_distribution complex(0.15);
  const double a = flip(rng) ? lead(rng) : -lead(rng);
  if (complex(rng)) {
    const double v = pos(rng);
    const double lift = std::uniform_real_distribution<double>(0.01, 3.0)(rng);
    // a((t - v)^2 + lift)
    return {Quadratic(a, -2.0 * a * v, a * (v * v + lift)), {}};
  }
  for (;;) {
    double p1 = pos(rng);
    double p2 = pos(rng);
    if (std::abs(p1 - p2) < 1e-3) continue;
    if (distance_to_ends(p1, iv) < 1e-6 || distance_to_ends(p2, iv) < 1e-6) continue;
    if (p1 > p2) std::swap(p1, p2);
    return {Quadratic(a, -a * (p1 + p2), a * p1 * p2), {p1, p2}};
  }
}

Interval random_interval(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(-3.0, 3.0);
  for (;;) {
    const double lo = pos(rng);
    const double hi = pos(rng);
    if (hi - lo > 1e-3) return {lo, hi};
  }
}

}  // namespace

TEST(Quadratic, RejectsZeroLeadingCoefficient) {
  EXPECT_THROW(Quadratic(0.0, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(Interval(1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(Interval(2.0, 1.0), std::invalid_argument);
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant({1, 2, -1}), 8.0);
  EXPECT_EQ(discriminant({1, 0, 1}), -4.0);
  EXPECT_EQ(discriminant({1, -2, 1}), 0.0);
}

TEST(Roots, Examples) {
  const auto r = roots({1, 2, -1});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0], -1.0 - kSqrt2, 1e-15);
  EXPECT_NEAR(r[1], -1.0 + kSqrt2, 1e-15);

  const auto t = roots({1, 1, 0});
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0], -1.0);
  EXPECT_EQ(t[1], 0.0);

  EXPECT_TRUE(roots({1, 0, 1}).empty());
  const auto d = roots({1, -2, 1});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], 1.0);
}

TEST(Roots, SmallRootKeepsRelativeAccuracy) {
  // t^2 - 1e8 t + 1: naive formula loses the small root entirely.
  const auto r = roots({1.0, -1e8, 1.0});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0], 1e-8, 1e-22);
  EXPECT_NEAR(r[1], 1e8, 1e-6);
}

TEST(BothRootsInside, Examples) {
  const Interval sym(-kSqrt2, kSqrt2);
  EXPECT_TRUE(both_roots_inside({1, 1, 0}, sym));
  EXPECT_FALSE(both_roots_inside({1, 0, -4}, sym));
  EXPECT_FALSE(both_roots_inside({1, 2, -1}, sym));
}

TEST(OneInsideOneOutside, Examples) {
  EXPECT_TRUE(one_inside_one_outside({1, 0, -1}, {0.0, kSqrt2}));
  EXPECT_FALSE(one_inside_one_outside({1, 1, 0}, {-kSqrt2, kSqrt2}));
  EXPECT_TRUE(one_inside_one_outside({1, 2, -1}, {-kSqrt2, kSqrt2}));
}

TEST(Locate, Examples) {
  const auto loc = locate({1, 2, -1}, {-kSqrt2, kSqrt2});
  ASSERT_TRUE(std::holds_alternative<location::TwoRoots>(loc));
  const auto& two = std::get<location::TwoRoots>(loc);
  EXPECT_EQ(two.place1, Placement::Outside);
  EXPECT_EQ(two.place2, Placement::Inside);
  EXPECT_NEAR(two.p2, kSqrt2 - 1.0, 1e-15);

  EXPECT_EQ(locate({1, -2, 1}, {0.0, 2.0}), RootLocation(location::DoubleRoot{1.0, true}));
  EXPECT_EQ(locate({1, 0, 1}, {0.0, 1.0}), RootLocation(location::NoRealRoots{}));

  const auto edge = std::get<location::TwoRoots>(locate({1, 0, -2}, {-kSqrt2, kSqrt2}));
  EXPECT_EQ(edge.place1, Placement::OnBoundary);
  EXPECT_EQ(edge.place2, Placement::OnBoundary);

  EXPECT_THROW(locate({1, 0, -2}, {-1, 1}, -1.0), std::invalid_argument);
}

TEST(Locate, ExactPredicatesImplyPlacements) {
  // Integer coefficients and endpoints: every quantity below is exact.
  for (int a : {-3, -1, 1, 2}) {
    for (int b = -6; b <= 6; ++b) {
      for (int c = -6; c <= 6; ++c) {
        for (auto [lo, hi] : {std::pair{-2, 2}, std::pair{-1, 3}, std::pair{0, 1}}) {
          const Quadratic q(a, b, c);
          const Interval iv(lo, hi);
          const auto loc = locate(q, iv, 0.0);
          if (both_roots_inside(q, iv)) {
            const auto& two = std::get<location::TwoRoots>(loc);
            EXPECT_EQ(two.place1, Placement::Inside);
            EXPECT_EQ(two.place2, Placement::Inside);
          }
          if (one_inside_one_outside(q, iv)) {
            const auto& two = std::get<location::TwoRoots>(loc);
            EXPECT_NE(two.place1, two.place2);
            EXPECT_NE(two.place1, Placement::OnBoundary);
            EXPECT_NE(two.place2, Placement::OnBoundary);
          }
        }
      }
    }
  }
}

TEST(Predicates, AgreeWithPlantedRootMembership) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const Interval iv = random_interval(rng);
    const Planted p = random_planted(rng, iv);
    bool both = false;
    bool split = false;
    if (p.roots.size() == 2) {
      const int count = inside(p.roots[0], iv) + inside(p.roots[1], iv);
      both = count == 2;
      split = count == 1;
    }
    ASSERT_EQ(both_roots_inside(p.q, iv), both) << "case " << i;
    ASSERT_EQ(one_inside_one_outside(p.q, iv), split) << "case " << i;

    // The computed roots tell the same story.
    const auto r = roots(p.q);
    ASSERT_EQ(r.size(), p.roots.size());
    for (std::size_t k = 0; k < r.size(); ++k) {
      ASSERT_EQ(inside(r[k], iv), inside(p.roots[k], iv));
    }
  }
}

TEST(Locate, ScaleInvariant) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> mag(-6.0, 6.0);
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < 1000; ++i) {
    const Interval iv = random_interval(rng);
    const Planted p = random_planted(rng, iv);
    const double alpha = (flip(rng) ? 1.0 : -1.0) * std::pow(10.0, mag(rng));
    const auto base = locate(p.q, iv);
    const auto scaled = locate(p.q.scaled(alpha), iv);
    ASSERT_EQ(base.index(), scaled.index());
    if (const auto* two = std::get_if<location::TwoRoots>(&base)) {
      const auto& other = std::get<location::TwoRoots>(scaled);
      EXPECT_EQ(two->place1, other.place1);
      EXPECT_EQ(two->place2, other.place2);
      EXPECT_NEAR(two->p1, other.p1, 1e-12 * (1.0 + std::abs(two->p1)));
      EXPECT_NEAR(two->p2, other.p2, 1e-12 * (1.0 + std::abs(two->p2)));
    }
  }
}

TEST(Roots, VietaRelations) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  int checked = 0;
  while (checked < 10000) {
    const double a = coef(rng);
    if (std::abs(a) < 1e-3) continue;
    const Quadratic q(a, coef(rng), coef(rng));
    if (discriminant(q) <= 0.0) continue;
    const auto r = roots(q);
    const double sum = -q.b() / q.a();
    const double prod = q.c() / q.a();
    EXPECT_LE(std::abs(r[0] + r[1] - sum), 1e-12 * std::max({1.0, std::abs(sum), std::abs(r[0]), std::abs(r[1])}));
    EXPECT_LE(std::abs(r[0] * r[1] - prod), 1e-12 * std::max(1.0, std::abs(prod)));
    ++checked;
  }
}
