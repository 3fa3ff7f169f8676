#pragma once

#include <functional>

namespace driftmax::numerics {

struct Quadrature {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
};

struct IntegralResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss–Kronrod (10/21) integration over [a, b].
/// Throws ConvergenceError carrying the best estimate when the subdivision
/// budget runs out before the error target is met.
IntegralResult integrate(const Integrand& f, double a, double b, const Quadrature& q = {});

/// Integral over [lower, ∞) via s = lower + t/(1−t), t ∈ [0, 1).
IntegralResult integrate_to_infinity(const Integrand& f, double lower, const Quadrature& q = {});

}  // namespace driftmax::numerics
