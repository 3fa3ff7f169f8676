#pragma once

#include <optional>

#include "driftmax/walks/assumptions.hpp"
#include "driftmax/walks/step_distribution.hpp"

namespace driftmax::constants {

/// θ₀ = argmin M(θ), found as the root of M′ on [0, c_m|μ|].
/// Throws PreconditionError when μ > 0, when C_M|μ| > σ*²/3, or when M′ has
/// no sign change on the bracket.
double tilt_point(const walks::StepDistribution& dist, const walks::AssumptionParams& params);

struct TiltedMoments {
  double q_mean;
  double q_second_moment;
  double q_variance;
  /// e^{θ̄}C_M and C_M^{−1}σ*²/2; present when params were supplied.
  std::optional<double> second_moment_ceiling;
  std::optional<double> variance_floor;
  bool bounds_hold = true;
};

/// Moments of one step under the tilted law Q(dx) ∝ e^{θ₀x}P(dx).
TiltedMoments tilted_moments(const walks::StepDistribution& dist, double theta0,
                             const std::optional<walks::AssumptionParams>& params = std::nullopt);

}  // namespace driftmax::constants
