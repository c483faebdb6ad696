#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "trigsum/quadratic_locator.hpp"

namespace trigsum {

/// Right-hand side c of F(x) = c, carried together with m = -c.
/// Integer targets remember their exact value so the reduction can stay in
/// integer arithmetic.
class Target {
 public:
  static Target real(double c);
  static Target integer(std::int64_t n);

  double c() const noexcept { return c_; }
  double m() const noexcept { return -c_; }
  const std::optional<std::int64_t>& integer_value() const noexcept { return n_; }
  bool is_integer() const noexcept { return n_.has_value(); }

 private:
  Target(double c, std::optional<std::int64_t> n) : c_(c), n_(n) {}
  double c_;
  std::optional<std::int64_t> n_;
};

/// Largest |n| accepted for integer targets; keeps m^2 + 2m - 7 inside int64.
inline constexpr std::int64_t kMaxIntegerTarget = 1'000'000'000;

/// Coefficients of S^3 + m S^2 + S + (2 - m), highest degree first.
template <typename T>
struct CubicCoeffs {
  std::array<T, 4> coeffs;

  T operator()(T s) const { return ((coeffs[0] * s + coeffs[1]) * s + coeffs[2]) * s + coeffs[3]; }
};

/// Integer quadratic t^2 + (m - 1) t + (2 - m), highest degree first.
struct ExactQuadratic {
  std::array<std::int64_t, 3> coeffs;

  std::int64_t discriminant() const noexcept {
    return coeffs[1] * coeffs[1] - 4 * coeffs[0] * coeffs[2];
  }
  std::int64_t operator()(std::int64_t t) const noexcept {
    return (coeffs[0] * t + coeffs[1]) * t + coeffs[2];
  }
  Quadratic to_real() const;
};

class NonzeroRemainder : public std::logic_error {
 public:
  explicit NonzeroRemainder(double remainder);
  double remainder() const noexcept { return remainder_; }

 private:
  double remainder_;
};

/// Thrown by g_of_s at its pole S = 1.
class PoleError : public std::domain_error {
 public:
  PoleError() : std::domain_error("S + 2/(S - 1) has a pole at S = 1") {}
};

CubicCoeffs<double> reduce(const Target& t);
CubicCoeffs<std::int64_t> reduce_exact(std::int64_t n);

/// Synthetic division by (S + 1). The remainder is computed and checked:
/// exactly zero for integers, within a few ulps of the coefficients for reals.
Quadratic deflate(const CubicCoeffs<double>& cubic);
ExactQuadratic deflate_exact(const CubicCoeffs<std::int64_t>& cubic);

/// S + 2/(S - 1): F expressed through S = sin x + cos x.
double g_of_s(double s);

}  // namespace trigsum
