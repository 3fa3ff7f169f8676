#include "driftmax/numerics/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "driftmax/error.hpp"

namespace driftmax::numerics {

namespace {

constexpr double kShift = 10.0;

void require_positive(double s, const char* name) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw DomainError(std::string(name) + ": argument must be positive and finite, got " + std::to_string(s));
}

}  // namespace

double digamma(double s) {
  require_positive(s, "digamma");
  double acc = 0.0;
  while (s < kShift) {
    acc -= 1.0 / s;
    s += 1.0;
  }
  const double r = 1.0 / (s * s);
  // B_{2k} / (2k) coefficients
  const double series =
      r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12))))));
  return acc + std::log(s) - 0.5 / s - series;
}

double trigamma(double s) {
  require_positive(s, "trigamma");
  double acc = 0.0;
  while (s < kShift) {
    acc += 1.0 / (s * s);
    s += 1.0;
  }
  const double r = 1.0 / (s * s);
  const double series =
      r * (1.0 / 6 - r * (1.0 / 30 - r * (1.0 / 42 - r * (1.0 / 30 - r * (5.0 / 66 - r * (691.0 / 2730 - r * 7.0 / 6))))));
  return acc + 1.0 / s + 0.5 * r + series / s;
}

double tetragamma(double s) {
  require_positive(s, "tetragamma");
  double acc = 0.0;
  while (s < kShift) {
    acc -= 2.0 / (s * s * s);
    s += 1.0;
  }
  const double r = 1.0 / (s * s);
  // (2k+1) B_{2k} coefficients
  const double series =
      r * (0.5 - r * (1.0 / 6 - r * (1.0 / 6 - r * (3.0 / 10 - r * (5.0 / 6 - r * (691.0 / 210 - r * 35.0 / 2))))));
  return acc - r - r / s - series * r;
}

double log_gamma(double s) {
  require_positive(s, "log_gamma");
  double product = 1.0;
  while (s < kShift) {
    product *= s;
    s += 1.0;
  }
  const double r = 1.0 / (s * s);
  const double series =
      (1.0 / 12 - r * (1.0 / 360 - r * (1.0 / 1260 - r * (1.0 / 1680 - r * (1.0 / 1188 - r * (691.0 / 360360 - r / 156)))))) / s;
  return (s - 0.5) * std::log(s) - s + 0.5 * std::log(2.0 * std::numbers::pi) + series - std::log(product);
}

}  // namespace driftmax::numerics
