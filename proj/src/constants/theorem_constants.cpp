#include "driftmax/constants/theorem_constants.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "driftmax/error.hpp"
#include "driftmax/numerics/normal.hpp"

namespace driftmax::constants {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

// 1 − Φ_{σ²}[−2, 2] without cancellation.
double outside_mass(double sigma_star2) { return numerics::gaussian_two_sided_tail(sigma_star2, 2.0); }

}  // namespace

double c_tau(double sigma_star2) {
  require_positive(sigma_star2, "c_tau: sigma_star2");
  return -std::log1p(-0.5 * outside_mass(sigma_star2));
}

double y0(double C_M, double sigma_star2, double theta_bar) {
  require_positive(C_M, "y0: C_M");
  require_positive(sigma_star2, "y0: sigma_star2");
  require_positive(theta_bar, "y0: theta_bar");
  const double sigma3 = sigma_star2 * std::sqrt(sigma_star2);
  return std::max(1.0, 6.0 * C_M / sigma3 / outside_mass(sigma_star2));
}

double horizon(double mu, std::uint64_t N) {
  if (N < 2) throw DomainError("horizon: N must be at least 2");
  if (!(mu <= 0.0)) throw DomainError("horizon: mu must be nonpositive");
  const double n = static_cast<double>(N);
  if (mu == 0.0) return n;
  return std::min(1.0 / (mu * mu), n);
}

TrialLadder trial_ladder(double x, std::uint64_t N, double H_N) {
  require_positive(x, "trial_ladder: x");
  require_positive(H_N, "trial_ladder: H_N");
  if (N < 2) throw DomainError("trial_ladder: N must be at least 2");
  const double cylinder = std::sqrt(H_N) / std::log(static_cast<double>(N));
  const double k = std::floor(std::log2(cylinder / x)) - 2.0;
  TrialLadder ladder{static_cast<std::int64_t>(k), {}, cylinder};
  if (k > 60.0) throw DomainError("trial_ladder: K exceeds 60");
  for (std::int64_t i = 0; i <= ladder.K; ++i) ladder.L.push_back((std::int64_t{1} << (i + 2)) - 3);
  return ladder;
}

TheoremConstants theorem_constants(const walks::AssumptionParams& params) {
  params.validate();
  const double cm = params.C_M;
  const double tb = params.theta_bar;
  const double s2 = params.sigma_star2;
  const double cmu = params.c_mu;
  const double sigma = std::sqrt(s2);

  TheoremConstants tc{};
  tc.c_tau = c_tau(s2);
  tc.y0 = y0(cm, s2, tb);
  tc.c_m = 2.0 / s2;
  const double inv_ctau = 1.0 / tc.c_tau;

  tc.C2 = 2.0 * (1.0 / sigma + 9.0 * std::exp(tb) / (s2 * sigma) * std::pow(cm, 2.5));

  // Closed form: 2(σ*^{-1} + 9e^{θ̄}σ*^{-3}C_M^{5/2}) + 2e^{8C_Mσ*^{-4} + 8σ*^{-2}}c_τ^{-1} + 12σ*^{-2}.
  const double big_exponent = 8.0 * cm / (s2 * s2) + 8.0 / s2;
  tc.C0 = Magnitude::from_value(tc.C2) + Magnitude::from_log(big_exponent).scaled(2.0 * inv_ctau) +
          Magnitude::from_value(12.0 / s2);

  // Split form through C3 = e^{2C_M c_m² + 4c_m} and C4 = 2C3/c_τ + 6c_m.
  tc.C3 = Magnitude::from_log(2.0 * cm * tc.c_m * tc.c_m + 4.0 * tc.c_m);
  tc.C4 = tc.C3.scaled(2.0 * inv_ctau) + Magnitude::from_value(6.0 * tc.c_m);
  tc.C0_split = Magnitude::from_value(tc.C2) + tc.C4;
  tc.C0_relative_gap = relative_log_difference(tc.C0, tc.C0_split);

  tc.C10 = tc.C0_split + Magnitude::from_value(2.0 * inv_ctau);
  tc.C11 = tc.C0_split + Magnitude::from_value(4.0 * inv_ctau);
  const double log_term = 2.0 / tb * (1.0 + std::log(std::exp(tb) * cm + 1.0));
  tc.C_A = tc.C11.scaled(1.0 + cmu) + Magnitude::from_value(log_term + cm);
  tc.C12 = tc.C_A.scaled(4.0).exp().scaled(4.0);
  tc.C = tc.C12 + Magnitude::from_value(3.0);

  // Single expression: 4 exp{4(C0 + 4/c_τ)(1 + c_μ) + 8θ̄^{-1}(1 + log(e^{θ̄}C_M + 1)) + 4C_M} + 3.
  const Magnitude exponent = (tc.C0 + Magnitude::from_value(4.0 * inv_ctau)).scaled(4.0 * (1.0 + cmu)) +
                             Magnitude::from_value(4.0 * (log_term + cm));
  tc.C_direct = exponent.exp().scaled(4.0) + Magnitude::from_value(3.0);
  tc.C_relative_gap = relative_log_difference(tc.C, tc.C_direct);
  tc.overflow = tc.C0.overflow() || tc.C.overflow();
  return tc;
}

TheoremConstants theorem_constants(const walks::AssumptionParams& params, double mu, double x) {
  TheoremConstants tc = theorem_constants(params);
  tc.H_N = horizon(mu, params.N);
  tc.ladder = trial_ladder(x, params.N, *tc.H_N);
  return tc;
}

}  // namespace driftmax::constants
