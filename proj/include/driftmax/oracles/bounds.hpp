#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "driftmax/constants/magnitude.hpp"
#include "driftmax/constants/theorem_constants.hpp"
#include "driftmax/walks/assumptions.hpp"

namespace driftmax::oracles {

/// Right-hand side of a probability bound. `value` is +inf when only
/// `log_value` is representable.
struct BoundValue {
  double value;
  double log_value;
  bool vacuous;  // value ≥ 1
  std::vector<std::pair<std::string, double>> components;
};

/// C · x · log N · (|μ| ∨ N^{−1/2}).
BoundValue thm_bound(const constants::Magnitude& C, std::uint64_t N, double x, double mu);
BoundValue thm_bound(double C, std::uint64_t N, double x, double mu);

/// C1(N^{1−(log N)/2} + (σx + σ² log N)/(N^{3/2}μ²) e^{(x/σ + log N)μ/σ}) + 1 − e^{2(x/σ + C1 log N)μ/σ}.
/// Components: "power", "drift", "escape". Requires N > e⁴, μ < 0.
BoundValue kmt_bound(double x, std::uint64_t N, double mu, double sigma, double C1);

/// 3ρ / (σ³ √n).
double berry_esseen_gap(double sigma2, double rho_abs3, std::uint64_t n);

/// 2 e^{−c_τ k}: ceiling for P(τ_y > k y²) when y ≥ y0.
double hitting_tail_bound(double c_tau, double k);

/// c₁^{−1} log(C₁ n + 1): ceiling for E max{0, Y₁..Yₙ} when E e^{tY} ≤ C₁ on [0, c₁].
double max_of_iid_bound(double c1, double C1, std::uint64_t n);

/// Lower bound on P(S_{τ_y} ≥ y) from the two-sided exit estimate with constant C10, or on
/// the truncated walk with constant C11 when a truncation level w is given:
/// ½[1 − C H^{−1/2}(y + (log H)²) − 2(θ̄y)^{−1} log(e^{θ̄}C_M H + 1) − H C_M e^{−θ̄w}].
/// The value is −inf when the constant overflows.
double exit_lower_bound(const constants::TheoremConstants& tc, const walks::AssumptionParams& params, double y,
                        double H_N, std::optional<double> truncation_w = std::nullopt);

struct GaussianLowerBound {
  double lower_bound;  // x N^{−1/2} |μ|
  double exact;        // 1 − e^{−2xN^{−1/2}|μ|}
  bool chain_holds;    // exact ≥ lower_bound
};

/// Gaussian walk S_m = B_m + m N^{−1/2} μ: P(max_{m≤N} S_m ≤ x) ≥ exact ≥ lower_bound.
GaussianLowerBound gaussian_lower_bound(double x, double mu, std::uint64_t N);

}  // namespace driftmax::oracles
