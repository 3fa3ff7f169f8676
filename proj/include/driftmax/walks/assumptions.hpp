#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "driftmax/walks/step_distribution.hpp"

namespace driftmax::walks {

/// Constants (C_M, θ̄, σ*², c_μ) of the standing assumption, plus the horizon N.
struct AssumptionParams {
  double C_M = 1.0;
  double theta_bar = 1.0;
  double sigma_star2 = 1.0;
  double c_mu = 1.0;
  std::uint64_t N = 2;

  /// Throws DomainError unless all constants are positive and finite and N ≥ 2.
  void validate() const;
};

struct ConditionRecord {
  std::string id;
  std::string requirement;
  double measured;
  double bound;
  bool pass;
};

struct AssumptionReport {
  std::vector<ConditionRecord> conditions;
  int grid_points;
  double safety_factor;
  bool pass;
};

inline constexpr int kAssumptionGridPoints = 1001;
inline constexpr double kAssumptionSafetyFactor = 0.999;

/// Checks (ed) max_{i≤3} sup_{|θ|≤θ̄} |M^{(i)}(θ)| ≤ C_M on a 1001-point grid with
/// a 0.999 safety factor, (cv) σ*² ≤ Var X and σ*² ≤ E X², (r) −c_μ(log N)^{−3}
/// ≤ μ ≤ 0, and containment of [−θ̄, θ̄] in the MGF domain.
AssumptionReport verify_assumptions(const StepDistribution& dist, const AssumptionParams& params);

}  // namespace driftmax::walks
