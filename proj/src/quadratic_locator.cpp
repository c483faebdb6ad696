#include "trigsum/quadratic_locator.hpp"

#include <cmath>
#include <stdexcept>

namespace trigsum {

Quadratic::Quadratic(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (a == 0.0 || !std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw std::invalid_argument("quadratic needs finite coefficients and a != 0");
  }
}

Quadratic Quadratic::scaled(double alpha) const { return {alpha * a_, alpha * b_, alpha * c_}; }

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo < hi)) {
    throw std::invalid_argument("interval needs lo < hi");
  }
}

std::string to_string(Placement p) {
  switch (p) {
    case Placement::Inside:
      return "inside";
    case Placement::Outside:
      return "outside";
    case Placement::OnBoundary:
      return "on_boundary";
  }
  return "unknown";
}

double discriminant(const Quadratic& q) noexcept { return q.b() * q.b() - 4.0 * q.a() * q.c(); }

std::vector<double> roots(const Quadratic& q) {
  const double d = discriminant(q);
  if (d < 0.0) {
    return {};
  }
  if (d == 0.0) {
    return {-q.b() / (2.0 * q.a())};
  }
  const double sign_b = q.b() >= 0.0 ? 1.0 : -1.0;
  const double qstar = -0.5 * (q.b() + sign_b * std::sqrt(d));
  double r1 = qstar / q.a();
  // qstar == 0 only when b == 0 and D == 0, handled above.
  double r2 = q.c() / qstar;
  if (r1 > r2) {
    std::swap(r1, r2);
  }
  return {r1, r2};
}

InsideConditions inside_conditions(const Quadratic& q, const Interval& iv) noexcept {
  const double vertex = -q.b() / (2.0 * q.a());
  return {
      discriminant(q) > 0.0,
      q.a() * q(iv.lo()) > 0.0 && q.a() * q(iv.hi()) > 0.0,
      iv.lo() < vertex && vertex < iv.hi(),
  };
}

bool both_roots_inside(const Quadratic& q, const Interval& iv) noexcept {
  const InsideConditions c = inside_conditions(q, iv);
  return c.positive_discriminant && c.endpoint_signs && c.vertex_inside;
}

bool one_inside_one_outside(const Quadratic& q, const Interval& iv) noexcept {
  return q(iv.lo()) * q(iv.hi()) < 0.0;
}

Placement place(double t, const Interval& iv, double boundary_tol) {
  if (std::abs(t - iv.lo()) <= boundary_tol || std::abs(t - iv.hi()) <= boundary_tol) {
    return Placement::OnBoundary;
  }
  return (t > iv.lo() && t < iv.hi()) ? Placement::Inside : Placement::Outside;
}

RootLocation locate(const Quadratic& q, const Interval& iv, double boundary_tol) {
  if (!(boundary_tol >= 0.0)) {
    throw std::invalid_argument("boundary tolerance must be non-negative");
  }
  const std::vector<double> r = roots(q);
  switch (r.size()) {
    case 0:
      return location::NoRealRoots{};
    case 1:
      return location::DoubleRoot{r[0], place(r[0], iv, boundary_tol) == Placement::Inside};
    default:
      return location::TwoRoots{r[0], r[1], place(r[0], iv, boundary_tol),
                                place(r[1], iv, boundary_tol)};
  }
}

}  // namespace trigsum
