#include "driftmax/constants/tilt.hpp"

#include <cmath>
#include <string>

#include "driftmax/error.hpp"
#include "driftmax/numerics/roots.hpp"

namespace driftmax::constants {

using walks::format_real;

double tilt_point(const walks::StepDistribution& dist, const walks::AssumptionParams& params) {
  params.validate();
  const double mu = dist.mean();
  if (mu > 0.0) throw PreconditionError("tilt_point: mean " + format_real(mu) + " is positive");
  if (mu == 0.0) return 0.0;
  if (params.C_M * std::abs(mu) > params.sigma_star2 / 3.0)
    throw PreconditionError("tilt_point: C_M|mu| = " + format_real(params.C_M * std::abs(mu)) +
                            " exceeds sigma_star2/3 = " + format_real(params.sigma_star2 / 3.0));
  const double hi = 2.0 / params.sigma_star2 * std::abs(mu);
  if (!dist.in_domain(hi))
    throw PreconditionError("tilt_point: bracket end c_m|mu| = " + format_real(hi) + " is outside the MGF domain");
  auto derivative = [&](double t) { return dist.mgf_deriv(t, 1); };
  if (!(derivative(hi) > 0.0))
    throw PreconditionError("tilt_point: M'(c_m|mu|) = " + format_real(derivative(hi)) + " is not positive");
  const double theta0 = numerics::find_root(derivative, 0.0, hi, 1e-15);
  if (theta0 < 0.0 || theta0 > hi) throw ConvergenceError("tilt_point: root left the bracket", theta0, hi);
  return theta0;
}

TiltedMoments tilted_moments(const walks::StepDistribution& dist, double theta0,
                             const std::optional<walks::AssumptionParams>& params) {
  if (!dist.in_domain(theta0))
    throw DomainError("tilted_moments: theta0 = " + format_real(theta0) + " is outside the MGF domain");
  const double m0 = dist.mgf(theta0);
  TiltedMoments out{};
  out.q_mean = dist.mgf_deriv(theta0, 1) / m0;
  out.q_second_moment = dist.mgf_deriv(theta0, 2) / m0;
  out.q_variance = out.q_second_moment - out.q_mean * out.q_mean;
  if (params) {
    params->validate();
    out.second_moment_ceiling = std::exp(params->theta_bar) * params->C_M;
    out.variance_floor = params->sigma_star2 / (2.0 * params->C_M);
    out.bounds_hold = out.q_second_moment <= *out.second_moment_ceiling && out.q_variance >= *out.variance_floor;
  }
  return out;
}

}  // namespace driftmax::constants
