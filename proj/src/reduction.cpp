#include "trigsum/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace trigsum {

Target Target::real(double c) {
  if (!std::isfinite(c)) {
    throw std::invalid_argument("target must be finite");
  }
  return Target(c, std::nullopt);
}

Target Target::integer(std::int64_t n) {
  if (n > kMaxIntegerTarget || n < -kMaxIntegerTarget) {
    throw std::out_of_range("integer target exceeds +/-" + std::to_string(kMaxIntegerTarget));
  }
  return Target(static_cast<double>(n), n);
}

Quadratic ExactQuadratic::to_real() const {
  return {static_cast<double>(coeffs[0]), static_cast<double>(coeffs[1]),
          static_cast<double>(coeffs[2])};
}

NonzeroRemainder::NonzeroRemainder(double remainder)
    : std::logic_error("synthetic division by (S + 1) left remainder " + std::to_string(remainder)),
      remainder_(remainder) {}

CubicCoeffs<double> reduce(const Target& t) {
  const double m = t.m();
  return {{1.0, m, 1.0, 2.0 - m}};
}

CubicCoeffs<std::int64_t> reduce_exact(std::int64_t n) {
  const std::int64_t m = -*Target::integer(n).integer_value();
  return {{1, m, 1, 2 - m}};
}

namespace {

// Horner's scheme at the root S = -1.
template <typename T>
std::array<T, 4> synthetic_divide(const std::array<T, 4>& p) {
  std::array<T, 4> out{};
  out[0] = p[0];
  for (std::size_t i = 1; i < 4; ++i) {
    out[i] = p[i] - out[i - 1];
  }
  return out;  // out[3] is the remainder
}

}  // namespace

Quadratic deflate(const CubicCoeffs<double>& cubic) {
  const auto q = synthetic_divide(cubic.coeffs);
  double scale = 0.0;
  for (double c : cubic.coeffs) {
    scale = std::max(scale, std::abs(c));
  }
  if (std::abs(q[3]) > 8.0 * std::numeric_limits<double>::epsilon() * scale) {
    throw NonzeroRemainder(q[3]);
  }
  return {q[0], q[1], q[2]};
}

ExactQuadratic deflate_exact(const CubicCoeffs<std::int64_t>& cubic) {
  const auto q = synthetic_divide(cubic.coeffs);
  if (q[3] != 0) {
    throw NonzeroRemainder(static_cast<double>(q[3]));
  }
  return {{q[0], q[1], q[2]}};
}

double g_of_s(double s) {
  if (s == 1.0) {
    throw PoleError();
  }
  return s + 2.0 / (s - 1.0);
}

}  // namespace trigsum
