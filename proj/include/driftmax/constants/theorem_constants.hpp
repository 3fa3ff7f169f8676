#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "driftmax/constants/magnitude.hpp"
#include "driftmax/walks/assumptions.hpp"

namespace driftmax::constants {

/// log(2 / (1 + Φ_{σ*²}[−2, 2])).
double c_tau(double sigma_star2);

/// 1 ∨ 6 C_M σ*^{−3} / (1 − Φ_{σ*²}[−2, 2]). θ̄ does not enter.
double y0(double C_M, double sigma_star2, double theta_bar = 1.0);

/// Horizon H_N = μ^{−2} ∧ N (N when μ = 0). Requires μ ≤ 0 and N ≥ 2.
double horizon(double mu, std::uint64_t N);

struct TrialLadder {
  /// ⌊log₂(x^{−1}(log N)^{−1}H_N^{1/2})⌋ − 2; negative means the decomposition is empty.
  std::int64_t K;
  /// L_0..L_K with L_i = 2^{i+2} − 3; empty when K < 0.
  std::vector<std::int64_t> L;
  /// (log N)^{−1} H_N^{1/2}.
  double cylinder;
  bool empty() const { return K < 1; }
};

TrialLadder trial_ladder(double x, std::uint64_t N, double H_N);

struct TheoremConstants {
  double c_tau;
  double y0;
  double c_m;
  Magnitude C0;         // closed form
  Magnitude C0_split;   // C2 + C4
  double C2;
  Magnitude C3;
  Magnitude C4;
  Magnitude C10;
  Magnitude C11;
  Magnitude C_A;
  Magnitude C12;
  Magnitude C;          // C12 + 3
  Magnitude C_direct;   // single closed-form expression
  double C0_relative_gap;
  double C_relative_gap;  // relative difference of ln C between the two routes
  bool overflow;          // some field exceeds binary64
  std::optional<double> H_N;
  std::optional<TrialLadder> ladder;
};

TheoremConstants theorem_constants(const walks::AssumptionParams& params);

/// Also fills H_N = horizon(mu, params.N) and the trial ladder at level x.
TheoremConstants theorem_constants(const walks::AssumptionParams& params, double mu, double x);

}  // namespace driftmax::constants
