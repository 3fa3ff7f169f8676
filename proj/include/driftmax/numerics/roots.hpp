#pragma once

#include <functional>

namespace driftmax::numerics {

/// Brent's method on [lo, hi]. Requires g(lo)·g(hi) ≤ 0; returns a point whose
/// enclosing bracket is narrower than tol (or an exact zero).
double find_root(const std::function<double(double)>& g, double lo, double hi, double tol = 1e-12,
                 int max_iterations = 200);

}  // namespace driftmax::numerics
