#pragma once

namespace driftmax::numerics {

// Polygamma family on the positive half-line. Each shifts the argument above
// 10 with the recurrence and then sums the Bernoulli asymptotic series;
// absolute error is below 1e-12 for arguments of moderate size.

double digamma(double s);
double trigamma(double s);
double tetragamma(double s);

/// ln Γ(s) for s > 0 (Stirling series after upward shift). Reentrant, unlike
/// std::lgamma, which writes the global signgam.
double log_gamma(double s);
inline double log_gamma_fn(double s) { return log_gamma(s); }

}  // namespace driftmax::numerics
