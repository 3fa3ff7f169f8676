#include "driftmax/numerics/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "driftmax/error.hpp"

namespace driftmax::numerics {

namespace {

constexpr std::array<double, 11> kNodes = {
    0.00000000000000000e+00, 1.48874338981631211e-01, 2.94392862701460198e-01, 4.33395394129247191e-01,
    5.62757134668604683e-01, 6.79409568299024406e-01, 7.80817726586416897e-01, 8.65063366688984511e-01,
    9.30157491355708226e-01, 9.73906528517171720e-01, 9.95657163025808081e-01};

constexpr std::array<double, 11> kKronrod = {
    1.49445554002916906e-01, 1.47739104901338491e-01, 1.42775938577060081e-01, 1.34709217311473326e-01,
    1.23491976262065851e-01, 1.09387158802297642e-01, 9.31254545836976055e-02, 7.50396748109199528e-02,
    5.47558965743519960e-02, 3.25581623079647275e-02, 1.16946388673718743e-02};

// Gauss weights at the odd-indexed Kronrod nodes.
constexpr std::array<double, 5> kGauss = {2.95524224714752870e-01, 2.69266719309996355e-01, 2.19086362515982044e-01,
                                          1.49451349150580593e-01, 6.66713443086881376e-02};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk21(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kKronrod[0] * fc;
  double gauss = 0.0;
  for (std::size_t i = 1; i < kNodes.size(); ++i) {
    const double dx = half * kNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrod[i] * pair;
    if (i % 2 == 1) gauss += kGauss[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod)) throw DomainError("integrate: integrand is not finite on the interval");
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

IntegralResult integrate(const Integrand& f, double a, double b, const Quadrature& q) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate: endpoints must be finite");
  if (q.max_subdivisions < 1) throw DomainError("integrate: max_subdivisions must be positive");
  if (a == b) return {};
  std::priority_queue<Segment> heap;
  const Segment first = gk21(f, a, b);
  heap.push(first);
  double value = first.value;
  double error = first.error;
  int subdivisions = 1;
  auto converged = [&] { return error <= std::max(q.abs_tol, q.rel_tol * std::abs(value)); };
  while (!converged()) {
    if (subdivisions >= q.max_subdivisions)
      throw ConvergenceError("integrate: subdivision limit reached", value, error);
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw ConvergenceError("integrate: interval cannot be bisected further", value, error);
    const Segment left = gk21(f, worst.a, mid);
    const Segment right = gk21(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
    // Re-sum occasionally so rounding in the running totals does not drift.
    if (subdivisions % 64 == 0) {
      auto copy = heap;
      value = 0.0;
      error = 0.0;
      while (!copy.empty()) {
        value += copy.top().value;
        error += copy.top().error;
        copy.pop();
      }
    }
  }
  return {value, error, subdivisions};
}

IntegralResult integrate_to_infinity(const Integrand& f, double lower, const Quadrature& q) {
  if (!std::isfinite(lower)) throw DomainError("integrate_to_infinity: lower limit must be finite");
  auto mapped = [&](double t) {
    if (t >= 1.0) return 0.0;
    const double one_minus = 1.0 - t;
    const double value = f(lower + t / one_minus);
    return value == 0.0 ? 0.0 : value / (one_minus * one_minus);
  };
  return integrate(mapped, 0.0, 1.0, q);
}

}  // namespace driftmax::numerics
