#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "driftmax/montecarlo/estimate.hpp"
#include "driftmax/numerics/rng.hpp"
#include "driftmax/walks/step_distribution.hpp"

namespace driftmax::montecarlo {

/// Default Lundberg cutoff: a path is abandoned once the chance that it ever
/// climbs back to the target level is below this.
inline constexpr double kDefaultCutoff = 1e-12;

/// Default step cap for ladder epochs.
inline constexpr std::int64_t kDefaultLadderCap = 1'000'000;

enum class MaxMethod {
  /// Bridge for Gaussian steps without truncation and x > 0, stepwise otherwise.
  automatic,
  /// One draw per step.
  stepwise,
  /// Gaussian only: dyadic Brownian-bridge refinement with pruning.
  bridge,
};

struct ExperimentConfig {
  explicit ExperimentConfig(walks::StepDistribution step_law) : dist(std::move(step_law)) {}

  walks::StepDistribution dist;
  std::uint64_t N = 1;
  double x = 0.0;
  std::uint64_t reps = 100000;
  std::uint64_t seed = 1;
  std::uint64_t chunk_size = kDefaultChunkSize;
  /// Steps are floored at −w when set.
  std::optional<double> w;
  MaxMethod method = MaxMethod::automatic;
  /// 0 disables the cutoff (and bridge pruning becomes exhaustive).
  double cutoff_epsilon = kDefaultCutoff;
  unsigned threads = 0;

  /// Throws DomainError unless reps ≥ 1, chunk_size ≥ 1, N ≥ 1, x not NaN,
  /// w > 0 when set and 0 ≤ cutoff_epsilon < 1.
  void validate() const;
  RunOptions run_options() const { return {chunk_size, threads}; }
};

/// Method actually used by estimate_max_le for this config.
MaxMethod resolve_method(const ExperimentConfig& config);

/// P(max_{1≤m≤N} S_m ≤ x), or of the truncated walk when w is set. Path i uses
/// RngStream(seed, i) whatever the chunking, so runs that differ only in N or
/// x see the same randomness. The cutoff adds at most cutoff_epsilon of bias
/// per path (upward).
Estimate estimate_max_le(const ExperimentConfig& config);

/// Fraction of paths whose first N steps contain a step below −w (so the
/// truncated walk differs from the original one). Uses the stepwise streams.
Estimate estimate_truncation_event(const ExperimentConfig& config);

/// P(τ_y > k y²) with τ_y = inf{m ≥ 1 : |S_m| ≥ y}; the event is decided on
/// steps 1..⌊k y²⌋. Throws DomainError if y ≤ 0, k < 0 or max_steps < k y².
Estimate estimate_hitting_tail(const walks::StepDistribution& dist, double y, double k, std::int64_t max_steps,
                               std::uint64_t reps, std::uint64_t seed, const RunOptions& options = {});

/// Same as estimate_hitting_tail for several k at once, sharing the paths.
std::vector<Estimate> estimate_hitting_tail_profile(const walks::StepDistribution& dist, double y,
                                                    const std::vector<double>& ks, std::int64_t max_steps,
                                                    std::uint64_t reps, std::uint64_t seed,
                                                    const RunOptions& options = {});

/// P(S_{τ̂} ≥ y) where τ̂ is the first exit from (−y, y) or ⌊horizon⌋ if that
/// comes first. An infinite horizon is allowed. Steps are floored at −w when
/// w is set.
Estimate estimate_exit_up(const walks::StepDistribution& dist, double y, double horizon, std::uint64_t reps,
                          std::uint64_t seed, const RunOptions& options = {}, std::optional<double> w = std::nullopt);

struct StageTally {
  /// Paths that entered this stage.
  std::uint64_t reached = 0;
  /// Ended the stage at or below −x L_i.
  std::uint64_t down = 0;
  /// Ended the stage at or above x.
  std::uint64_t up = 0;

  double down_frequency() const;
};

struct TrialDecomposition {
  /// P(max_{1≤m≤T_K} Ŝ_m < x).
  Estimate never_reached;
  std::int64_t K = 0;
  std::vector<std::int64_t> L;
  /// Stage 0 is the first exit of (−x, x); stage i ≥ 1 runs from T_{i−1} to T_i.
  std::vector<StageTally> stages;
  /// Paths stopped by max_steps before T_K; counted as never reaching x.
  std::uint64_t censored = 0;
  double H_N = 0.0;
};

/// Simulates the walk with steps floored at −x and the stopping times T_0..T_K
/// of the trial ladder for (x, N, H_N = horizon(mean, N)). config.w must be
/// unset or equal to x. Throws PreconditionError when K < 1.
TrialDecomposition estimate_trial_decomposition(const ExperimentConfig& config,
                                                std::int64_t max_steps = std::int64_t{1} << 40);

struct LadderHistogram {
  std::int64_t n_max = 0;
  std::uint64_t reps = 0;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = 0;
  /// counts[n − 1] = #{T₁ = n} for n = 1..n_max.
  std::vector<std::uint64_t> counts;
  /// n_max < T₁ ≤ step_cap.
  std::uint64_t beyond = 0;
  /// Abandoned by the Lundberg cutoff (T₁ = ∞ up to cutoff_epsilon).
  std::uint64_t infinite_by_cutoff = 0;
  /// Still below 0 after step_cap steps.
  std::uint64_t censored = 0;
  std::int64_t step_cap = 0;
  double cutoff_epsilon = 0.0;
  std::optional<std::string> warning;

  Estimate frequency(std::int64_t n) const;
  /// infinite_by_cutoff + censored.
  Estimate infinite_mass() const;
};

/// Histogram of the first strict ascending ladder epoch T₁ = inf{n ≥ 1 : S_n > 0}.
LadderHistogram estimate_ladder_intervals(const walks::StepDistribution& dist, std::int64_t n_max,
                                          std::uint64_t reps, std::uint64_t seed, const RunOptions& options = {},
                                          std::int64_t step_cap = kDefaultLadderCap,
                                          double cutoff_epsilon = kDefaultCutoff);

using Sampler = std::function<double(numerics::RngStream&)>;

/// E[max{0, Y₁, ..., Y_n}] for i.i.d. Y drawn by `sampler` (mean estimate).
Estimate estimate_max_of_iid(const Sampler& sampler, std::int64_t n, std::uint64_t reps, std::uint64_t seed,
                             const RunOptions& options = {});
Estimate estimate_max_of_iid(const walks::StepDistribution& dist, std::int64_t n, std::uint64_t reps,
                             std::uint64_t seed, const RunOptions& options = {});

}  // namespace driftmax::montecarlo
