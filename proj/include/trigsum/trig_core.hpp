#pragma once

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace trigsum {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kSqrt2 = std::numbers::sqrt2;

/// Default distance (radians) below which a point counts as a pole of F.
inline constexpr double kDomainTol = 1e-12;

/// A finite angle in radians.
class Radians {
 public:
  explicit Radians(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// Where an angle sits relative to the pole lattice {K*pi/2} of F.
///
/// SingularSin / SingularCos mean the angle is the floating-point image of a
/// lattice point (sin x or cos x vanishes to rounding). NearSingular means the
/// angle is distinguishable from the lattice point but still within the
/// requested tolerance of it. Valid is everything farther than the tolerance.
struct DomainStatus {
  enum class Kind { Valid, SingularSin, SingularCos, NearSingular };

  Kind kind = Kind::Valid;
  double distance = 0.0;  // to the nearest lattice point

  bool valid() const noexcept { return kind == Kind::Valid; }
};

std::string to_string(DomainStatus::Kind kind);

/// Thrown by eval_f for an argument outside the domain of F.
class SingularInput : public std::domain_error {
 public:
  SingularInput(double x, DomainStatus status);
  double x() const noexcept { return x_; }
  const DomainStatus& status() const noexcept { return status_; }

 private:
  double x_;
  DomainStatus status_;
};

DomainStatus classify_domain(Radians x, double tol = kDomainTol);

/// sin x + cos x + sec x + csc x + tan x + cot x.
double eval_f(Radians x, double tol = kDomainTol);

/// S = sin x + cos x, which always lies in [-sqrt2, sqrt2].
double sum_s(Radians x) noexcept;

/// sin x cos x expressed through S: (S^2 - 1) / 2.
double half_product(double s) noexcept;

/// Solution families of cos x = b.
namespace cos_eq {
struct NoSolution {};
struct OddMultiples {};   // x = (2K+1) pi
struct EvenMultiples {};  // x = 2K pi
struct PlusMinus {        // x = 2K pi +/- theta, 0 < theta < pi
  double theta;
};
}  // namespace cos_eq

using CosSolutionFamily = std::variant<cos_eq::NoSolution, cos_eq::OddMultiples,
                                       cos_eq::EvenMultiples, cos_eq::PlusMinus>;

CosSolutionFamily solve_cos_eq(double b);

/// Reduce an angle to [0, 2 pi).
double normalize_angle(double x) noexcept;

/// Distance between two angles measured around the circle.
double circular_distance(double x, double y) noexcept;

/// "pi/4", "3pi/2", ... when x is a multiple of pi/4 to within 1e-12.
std::optional<std::string> quarter_pi_form(double x);

}  // namespace trigsum
