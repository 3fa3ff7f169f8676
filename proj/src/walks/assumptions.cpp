#include "driftmax/walks/assumptions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "driftmax/error.hpp"

namespace driftmax::walks {

void AssumptionParams::validate() const {
  auto ok = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!ok(C_M)) throw DomainError("assumption params: C_M must be positive and finite");
  if (!ok(theta_bar)) throw DomainError("assumption params: theta_bar must be positive and finite");
  if (!ok(sigma_star2)) throw DomainError("assumption params: sigma_star2 must be positive and finite");
  if (!ok(c_mu)) throw DomainError("assumption params: c_mu must be positive and finite");
  if (N < 2) throw DomainError("assumption params: N must be at least 2");
}

AssumptionReport verify_assumptions(const StepDistribution& dist, const AssumptionParams& params) {
  params.validate();
  AssumptionReport report{{}, kAssumptionGridPoints, kAssumptionSafetyFactor, true};
  auto add = [&](ConditionRecord r) {
    report.pass = report.pass && r.pass;
    report.conditions.push_back(std::move(r));
  };

  const double tb = params.theta_bar;
  const bool contained = dist.in_domain(-tb) && dist.in_domain(tb);
  const auto [lo, hi] = dist.mgf_domain();
  add({"domain", "[-theta_bar, theta_bar] inside MGF domain (" + format_real(lo) + ", " + format_real(hi) + ")", tb,
       std::min(-lo, hi), contained});

  if (contained) {
    double grid_max = 0.0;
    for (int k = 0; k < kAssumptionGridPoints; ++k) {
      const double theta = -tb + 2.0 * tb * k / (kAssumptionGridPoints - 1);
      for (int order = 0; order <= 3; ++order) grid_max = std::max(grid_max, std::abs(dist.mgf_deriv(theta, order)));
    }
    const double bound = kAssumptionSafetyFactor * params.C_M;
    add({"ed", "max_{i<=3} |M^(i)| on grid <= 0.999 C_M", grid_max, bound, grid_max <= bound});
  } else {
    add({"ed", "max_{i<=3} |M^(i)| on grid <= 0.999 C_M (not evaluable)", std::numeric_limits<double>::infinity(),
         kAssumptionSafetyFactor * params.C_M, false});
  }

  const double var = dist.variance();
  const double m2 = dist.second_moment();
  add({"cv.var", "sigma_star2 <= Var X", var, params.sigma_star2, params.sigma_star2 <= var});
  add({"cv.m2", "sigma_star2 <= E X^2", m2, params.sigma_star2, params.sigma_star2 <= m2});

  const double mu = dist.mean();
  const double log_n = std::log(static_cast<double>(params.N));
  const double floor_mu = -params.c_mu / (log_n * log_n * log_n);
  add({"r.lower", "-c_mu (log N)^-3 <= mu", mu, floor_mu, floor_mu <= mu});
  add({"r.upper", "mu <= 0", mu, 0.0, mu <= 0.0});
  return report;
}

}  // namespace driftmax::walks
