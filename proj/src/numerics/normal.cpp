#include "driftmax/numerics/normal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "driftmax/error.hpp"

namespace driftmax::numerics {

double normal_cdf(double z) {
  if (std::isnan(z)) throw DomainError("normal_cdf: argument is NaN");
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double log_normal_cdf(double z) {
  if (std::isnan(z)) throw DomainError("log_normal_cdf: argument is NaN");
  if (z > -20.0) return std::log(normal_cdf(z));
  // Mills-ratio asymptotic expansion for the far lower tail.
  const double z2 = z * z;
  const double r = 1.0 / z2;
  const double series = 1.0 - r * (1.0 - 3.0 * r * (1.0 - 5.0 * r * (1.0 - 7.0 * r)));
  return -0.5 * z2 - std::log(-z) - 0.5 * std::log(2.0 * std::numbers::pi) + std::log(series);
}

double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

double gaussian_interval_mass(double variance, double a, double b) {
  if (!(variance > 0.0) || !std::isfinite(variance))
    throw DomainError("gaussian_interval_mass: variance must be positive, got " + std::to_string(variance));
  if (std::isnan(a) || std::isnan(b)) throw DomainError("gaussian_interval_mass: NaN endpoint");
  if (!(a <= b)) throw DomainError("gaussian_interval_mass: require a <= b");
  const double s = std::sqrt(variance);
  const double za = a / s;
  const double zb = b / s;
  // Subtract the tails on the side with less cancellation.
  if (za >= 0.0) return normal_cdf(-za) - normal_cdf(-zb);
  if (zb <= 0.0) return normal_cdf(zb) - normal_cdf(za);
  return 1.0 - normal_cdf(za) - normal_cdf(-zb);
}

double gaussian_two_sided_tail(double variance, double t) {
  if (!(variance > 0.0) || !std::isfinite(variance))
    throw DomainError("gaussian_two_sided_tail: variance must be positive, got " + std::to_string(variance));
  if (std::isnan(t)) throw DomainError("gaussian_two_sided_tail: NaN threshold");
  if (t <= 0.0) return 1.0;
  return std::erfc(t / std::sqrt(2.0 * variance));
}

}  // namespace driftmax::numerics
