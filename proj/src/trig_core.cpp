#include "trigsum/trig_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace trigsum {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Rounding floor of the argument reduction: anything closer than this to a
// lattice point is that lattice point as far as doubles can tell.
double lattice_floor(double x) noexcept {
  return 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
}

}  // namespace

Radians::Radians(double value) : value_(value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("angle must be finite");
  }
}

std::string to_string(DomainStatus::Kind kind) {
  switch (kind) {
    case DomainStatus::Kind::Valid:
      return "valid";
    case DomainStatus::Kind::SingularSin:
      return "singular_sin";
    case DomainStatus::Kind::SingularCos:
      return "singular_cos";
    case DomainStatus::Kind::NearSingular:
      return "near_singular";
  }
  return "unknown";
}

SingularInput::SingularInput(double x, DomainStatus status)
    : std::domain_error("F is undefined or ill-conditioned at x = " + std::to_string(x) +
                        " (" + to_string(status.kind) + ")"),
      x_(x),
      status_(status) {}

DomainStatus classify_domain(Radians x, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("domain tolerance must be positive");
  }
  int quotient = 0;
  const double distance = std::abs(std::remquo(x.value(), kHalfPi, &quotient));
  if (distance > tol) {
    return {DomainStatus::Kind::Valid, distance};
  }
  if (distance <= lattice_floor(x.value())) {
    // Even multiples of pi/2 zero the sine, odd ones the cosine.
    const bool even = (quotient % 2) == 0;
    return {even ? DomainStatus::Kind::SingularSin : DomainStatus::Kind::SingularCos, distance};
  }
  return {DomainStatus::Kind::NearSingular, distance};
}

double eval_f(Radians x, double tol) {
  const DomainStatus status = classify_domain(x, tol);
  if (!status.valid()) {
    throw SingularInput(x.value(), status);
  }
  const double s = std::sin(x.value());
  const double c = std::cos(x.value());
  return s + c + 1.0 / c + 1.0 / s + s / c + c / s;
}

double sum_s(Radians x) noexcept { return std::sin(x.value()) + std::cos(x.value()); }

double half_product(double s) noexcept { return (s * s - 1.0) / 2.0; }

CosSolutionFamily solve_cos_eq(double b) {
  if (!std::isfinite(b)) {
    throw std::invalid_argument("cos x = b needs a finite b");
  }
  if (b > 1.0 || b < -1.0) {
    return cos_eq::NoSolution{};
  }
  if (b == -1.0) {
    return cos_eq::OddMultiples{};
  }
  if (b == 1.0) {
    return cos_eq::EvenMultiples{};
  }
  return cos_eq::PlusMinus{std::acos(b)};
}

double normalize_angle(double x) noexcept {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  // fmod + shift can land exactly on 2 pi after rounding.
  if (r >= kTwoPi) {
    r = 0.0;
  }
  return r;
}

double circular_distance(double x, double y) noexcept {
  const double d = normalize_angle(x - y);
  return std::min(d, kTwoPi - d);
}

std::optional<std::string> quarter_pi_form(double x) {
  const double quarters = x / (std::numbers::pi / 4.0);
  const double k = std::round(quarters);
  if (std::abs(quarters - k) * (std::numbers::pi / 4.0) > 1e-12) {
    return std::nullopt;
  }
  auto num = static_cast<long long>(k);
  if (num == 0) {
    return "0";
  }
  long long den = 4;
  while (den > 1 && num % 2 == 0) {
    num /= 2;
    den /= 2;
  }
  std::string out = num == 1 ? "" : num == -1 ? "-" : std::to_string(num);
  out += "pi";
  if (den > 1) {
    out += "/" + std::to_string(den);
  }
  return out;
}

}  // namespace trigsum
