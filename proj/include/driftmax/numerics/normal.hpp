#pragma once

namespace driftmax::numerics {

/// Standard normal distribution function Φ(z).
double normal_cdf(double z);

/// log Φ(z), accurate deep in the lower tail.
double log_normal_cdf(double z);

/// Standard normal density.
double normal_pdf(double z);

/// P(a ≤ Z ≤ b) for Z ~ N(0, variance). Infinite endpoints are allowed.
double gaussian_interval_mass(double variance, double a, double b);

/// P(|Z| > t) for Z ~ N(0, variance), computed without cancellation.
double gaussian_two_sided_tail(double variance, double t);

}  // namespace driftmax::numerics
