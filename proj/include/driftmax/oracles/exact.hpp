#pragma once

#include <cstdint>

#include "driftmax/numerics/quadrature.hpp"

namespace driftmax::oracles {

/// P(sup_{n≥0} S_n ≤ x) = 1 − (β/α)e^{−(α−β)x} for steps Exp(α) − Exp(β), α > β.
double exp_sup_cdf(double alpha, double beta, double x);

/// P(T = n) = C_{n−1} α^{n−1} β^n / (α+β)^{2n−1} for the first strict ascending
/// ladder epoch T of the same walk.
double ladder_interval_pmf(double alpha, double beta, std::uint64_t n);

/// P(T = ∞) = 1 − β/α.
double ladder_infinite_mass(double alpha, double beta);

struct LadderNormalization {
  std::uint64_t n_star;  // last term summed
  double finite_mass;    // Σ_{n ≤ n*} P(T = n)
  double tail_bound;     // ceiling on Σ_{n > n*} P(T = n)
  double total;          // finite_mass + P(T = ∞)
};

/// Sums the pmf with the Catalan recurrence in log space until the geometric
/// tail ceiling drops below `tail_tol`.
LadderNormalization ladder_normalization(double alpha, double beta, double tail_tol = 1e-12);

/// E[ζ] = (αβ)^{−1}μ^{−2}, μ = (β−α)/(αβ).
double ladder_epoch_mean_time(double alpha, double beta);

/// P(sup_{0≤s≤t}(B_s + μs) < b) by the reflection formula.
double bm_max_cdf(double mu, double t, double b);

/// The same probability at t = 1 from the hitting-time density:
/// b e^{bμ} ∫₁^∞ (2πs³)^{−1/2} e^{−b²/(2s) − μ²s/2} ds + 1 − e^{2bμ}. Requires μ < 0.
double bm_max_cdf_integral(double mu_eff, double b, const numerics::Quadrature& q = {});

/// Probability that a ±1 walk with up-probability p started at 0 reaches +y
/// before −y (y a positive integer).
double gamblers_ruin_up(double p, std::int64_t y);

/// Probability that the same walk started at 0 reaches +up before −down.
double gamblers_ruin_up(double p, std::int64_t up, std::int64_t down);

}  // namespace driftmax::oracles
