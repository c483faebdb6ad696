#pragma once

#include <string>
#include <variant>
#include <vector>

namespace trigsum {

inline constexpr double kBoundaryTol = 1e-12;

/// f(t) = a t^2 + b t + c with a != 0.
class Quadratic {
 public:
  Quadratic(double a, double b, double c);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }

  double operator()(double t) const noexcept { return (a_ * t + b_) * t + c_; }
  Quadratic scaled(double alpha) const;

 private:
  double a_, b_, c_;
};

/// Open interval (lo, hi), lo < hi.
class Interval {
 public:
  Interval(double lo, double hi);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_, hi_;
};

enum class Placement { Inside, Outside, OnBoundary };

std::string to_string(Placement p);

namespace location {
struct NoRealRoots {
  bool operator==(const NoRealRoots&) const = default;
};
struct DoubleRoot {
  double t;
  bool inside;
  bool operator==(const DoubleRoot&) const = default;
};
struct TwoRoots {
  double p1, p2;  // p1 < p2
  Placement place1, place2;
  bool operator==(const TwoRoots&) const = default;
};
}  // namespace location

using RootLocation =
    std::variant<location::NoRealRoots, location::DoubleRoot, location::TwoRoots>;

double discriminant(const Quadratic& q) noexcept;

/// Real roots in ascending order; a double root is reported once.
/// Distinct roots come from the cancellation-free pair q*/a, c/q* with
/// q* = -(b + sign(b) sqrt(D)) / 2.
std::vector<double> roots(const Quadratic& q);

/// Two distinct roots, both strictly inside the interval. Evaluated through
/// the discriminant, endpoint-sign and vertex conditions rather than roots().
bool both_roots_inside(const Quadratic& q, const Interval& iv) noexcept;

/// Exactly one root inside the interval and the other outside its closure,
/// i.e. f(lo) f(hi) < 0.
bool one_inside_one_outside(const Quadratic& q, const Interval& iv) noexcept;

/// Per-condition view of the two-roots-inside test, for reporting.
struct InsideConditions {
  bool positive_discriminant;
  bool endpoint_signs;  // a f(lo) > 0 and a f(hi) > 0
  bool vertex_inside;   // lo < -b / 2a < hi
};

InsideConditions inside_conditions(const Quadratic& q, const Interval& iv) noexcept;

Placement place(double t, const Interval& iv, double boundary_tol);

RootLocation locate(const Quadratic& q, const Interval& iv, double boundary_tol = kBoundaryTol);

}  // namespace trigsum
