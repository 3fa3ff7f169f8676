#include "driftmax/numerics/roots.hpp"

#include <cmath>
#include <limits>
#include <algorithm>

#include "driftmax/error.hpp"

namespace driftmax::numerics {

double find_root(const std::function<double(double)>& g, double lo, double hi, double tol, int max_iterations) {
  if (!(lo <= hi)) throw DomainError("find_root: require lo <= hi");
  if (!(tol > 0.0)) throw DomainError("find_root: tolerance must be positive");
  double a = lo, b = hi;
  double fa = g(a), fb = g(b);
  if (std::isnan(fa) || std::isnan(fb)) throw DomainError("find_root: function is NaN at a bracket end");
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) throw DomainError("find_root: bracket does not straddle a sign change");

  double c = a, fc = fa;
  double d = b - a, e = d;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < max_iterations; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0)
        q = -q;
      else
        p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = d;
      }
    } else {
      d = m;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : (m > 0.0 ? tol1 : -tol1);
    fb = g(b);
    if (std::isnan(fb)) throw DomainError("find_root: function returned NaN inside the bracket");
  }
  throw ConvergenceError("find_root: iteration limit reached", b, std::abs(c - b));
}

}  // namespace driftmax::numerics
