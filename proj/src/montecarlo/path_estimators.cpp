#include <algorithm>
#include <cmath>
#include <limits>
#include <variant>
#include <vector>

#include "driftmax/constants/theorem_constants.hpp"
#include "driftmax/error.hpp"
#include "driftmax/montecarlo/engine.hpp"
#include "driftmax/montecarlo/estimators.hpp"

namespace driftmax::montecarlo {

using numerics::RngStream;

namespace {

void check_reps(std::uint64_t reps, const RunOptions& options) {
  if (reps < 1) throw DomainError("reps must be at least 1");
  if (options.chunk_size < 1) throw DomainError("chunk_size must be at least 1");
}

std::int64_t steps_for(double k, double y) {
  return static_cast<std::int64_t>(std::floor(k * y * y));
}

}  // namespace

std::vector<Estimate> estimate_hitting_tail_profile(const walks::StepDistribution& dist, double y,
                                                    const std::vector<double>& ks, std::int64_t max_steps,
                                                    std::uint64_t reps, std::uint64_t seed,
                                                    const RunOptions& options) {
  check_reps(reps, options);
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("hitting tail: y must be positive and finite");
  if (ks.empty()) throw DomainError("hitting tail: no k values");
  std::vector<std::int64_t> horizons;
  for (double k : ks) {
    if (!(k >= 0.0)) throw DomainError("hitting tail: k must be nonnegative");
    if (static_cast<double>(max_steps) < k * y * y) throw DomainError("hitting tail: max_steps is below k y^2");
    horizons.push_back(steps_for(k, y));
  }
  const std::int64_t longest = *std::max_element(horizons.begin(), horizons.end());

  struct Acc {
    std::vector<std::uint64_t> survivors;
  };
  auto chunks = std::visit(
      [&](const auto& law) {
        return run_chunks<Acc>(reps, options, [&](Acc& acc, std::uint64_t i) {
          if (acc.survivors.empty()) acc.survivors.assign(horizons.size(), 0);
          RngStream rng(seed, i);
          double s = 0.0;
          std::int64_t tau = 1;
          for (; tau <= longest; ++tau) {
            s += law.sample(rng);
            if (std::abs(s) >= y) break;
          }
          // tau > longest means no hit within the simulated steps.
          for (std::size_t j = 0; j < horizons.size(); ++j)
            if (tau > horizons[j]) ++acc.survivors[j];
        });
      },
      dist.kind());

  std::vector<Estimate> out;
  for (std::size_t j = 0; j < horizons.size(); ++j) {
    std::uint64_t total = 0;
    for (const auto& c : chunks)
      if (!c.survivors.empty()) total += c.survivors[j];
    out.push_back(proportion_estimate(total, reps, seed, options.chunk_size));
  }
  return out;
}

Estimate estimate_hitting_tail(const walks::StepDistribution& dist, double y, double k, std::int64_t max_steps,
                               std::uint64_t reps, std::uint64_t seed, const RunOptions& options) {
  return estimate_hitting_tail_profile(dist, y, {k}, max_steps, reps, seed, options).front();
}

Estimate estimate_exit_up(const walks::StepDistribution& dist, double y, double horizon, std::uint64_t reps,
                          std::uint64_t seed, const RunOptions& options, std::optional<double> w) {
  check_reps(reps, options);
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("exit: y must be positive and finite");
  if (!(horizon >= 1.0)) throw DomainError("exit: horizon must be at least 1");
  if (w && !(*w > 0.0)) throw DomainError("exit: truncation w must be positive");
  const std::int64_t steps = horizon >= 9.0e18 ? std::numeric_limits<std::int64_t>::max()
                                               : static_cast<std::int64_t>(std::floor(horizon));
  const double floor = w ? -*w : -std::numeric_limits<double>::infinity();

  struct Count {
    std::uint64_t up = 0;
  };
  auto chunks = std::visit(
      [&](const auto& law) {
        return run_chunks<Count>(reps, options, [&](Count& acc, std::uint64_t i) {
          RngStream rng(seed, i);
          double s = 0.0;
          for (std::int64_t m = 0; m < steps; ++m) {
            s += std::max(law.sample(rng), floor);
            if (s >= y) {
              ++acc.up;
              return;
            }
            if (s <= -y) return;
          }
        });
      },
      dist.kind());
  std::uint64_t up = 0;
  for (const auto& c : chunks) up += c.up;
  return proportion_estimate(up, reps, seed, options.chunk_size);
}

double StageTally::down_frequency() const {
  return reached == 0 ? 0.0 : static_cast<double>(down) / static_cast<double>(reached);
}

TrialDecomposition estimate_trial_decomposition(const ExperimentConfig& config, std::int64_t max_steps) {
  config.validate();
  if (!(config.x > 0.0)) throw DomainError("trial decomposition: x must be positive");
  if (config.w && *config.w != config.x) throw DomainError("trial decomposition: w must equal x");
  if (max_steps < 1) throw DomainError("trial decomposition: max_steps must be positive");
  const double H = constants::horizon(config.dist.mean(), config.N);
  const auto ladder = constants::trial_ladder(config.x, config.N, H);
  if (ladder.K < 1)
    throw PreconditionError("trial decomposition is empty (K = " + std::to_string(ladder.K) +
                            "); x is too large for this N and drift");
  const auto K = static_cast<std::size_t>(ladder.K);
  const double x = config.x;
  std::vector<double> down_levels;
  for (auto l : ladder.L) down_levels.push_back(-x * static_cast<double>(l));

  struct Acc {
    std::uint64_t never = 0;
    std::uint64_t censored = 0;
    std::vector<StageTally> stages;
  };
  auto chunks = std::visit(
      [&](const auto& law) {
        return run_chunks<Acc>(config.reps, config.run_options(), [&](Acc& acc, std::uint64_t i) {
          if (acc.stages.empty()) acc.stages.assign(K + 1, {});
          RngStream rng(config.seed, i);
          double s = 0.0;
          std::size_t stage = 0;
          ++acc.stages[0].reached;
          for (std::int64_t m = 0; m < max_steps; ++m) {
            s += std::max(law.sample(rng), -x);
            if (s >= x) {
              ++acc.stages[stage].up;
              return;
            }
            // T_i = T_{i-1} is allowed, so several stages may end on one step.
            while (s <= down_levels[stage]) {
              ++acc.stages[stage].down;
              if (stage == K) {
                ++acc.never;
                return;
              }
              ++stage;
              ++acc.stages[stage].reached;
            }
          }
          ++acc.never;
          ++acc.censored;
        });
      },
      config.dist.kind());

  TrialDecomposition out;
  out.K = ladder.K;
  out.L = ladder.L;
  out.H_N = H;
  out.stages.assign(K + 1, {});
  std::uint64_t never = 0;
  for (const auto& c : chunks) {
    never += c.never;
    out.censored += c.censored;
    for (std::size_t j = 0; j < c.stages.size(); ++j) {
      out.stages[j].reached += c.stages[j].reached;
      out.stages[j].down += c.stages[j].down;
      out.stages[j].up += c.stages[j].up;
    }
  }
  out.never_reached = proportion_estimate(never, config.reps, config.seed, config.chunk_size);
  return out;
}

Estimate LadderHistogram::frequency(std::int64_t n) const {
  if (n < 1 || n > n_max) throw DomainError("ladder histogram: n outside 1..n_max");
  return proportion_estimate(counts[static_cast<std::size_t>(n - 1)], reps, seed, chunk_size);
}

Estimate LadderHistogram::infinite_mass() const {
  return proportion_estimate(infinite_by_cutoff + censored, reps, seed, chunk_size);
}

LadderHistogram estimate_ladder_intervals(const walks::StepDistribution& dist, std::int64_t n_max,
                                          std::uint64_t reps, std::uint64_t seed, const RunOptions& options,
                                          std::int64_t step_cap, double cutoff_epsilon) {
  check_reps(reps, options);
  if (n_max < 1) throw DomainError("ladder: n_max must be at least 1");
  if (step_cap < n_max) throw DomainError("ladder: step_cap must be at least n_max");
  if (!(cutoff_epsilon >= 0.0 && cutoff_epsilon < 1.0)) throw DomainError("ladder: cutoff_epsilon must lie in [0, 1)");

  LadderHistogram out;
  out.n_max = n_max;
  out.reps = reps;
  out.seed = seed;
  out.chunk_size = options.chunk_size;
  out.step_cap = step_cap;
  out.cutoff_epsilon = cutoff_epsilon;
  if (dist.mean() >= 0.0)
    out.warning = "nonnegative drift: T1 is finite almost surely, so the infinite mass is pure censoring";

  double gap = std::numeric_limits<double>::infinity();
  if (const auto root = dist.lundberg_root(); root && *root > 0.0 && cutoff_epsilon > 0.0)
    gap = -std::log(cutoff_epsilon) / *root;

  struct Acc {
    std::vector<std::uint64_t> counts;
    std::uint64_t beyond = 0;
    std::uint64_t cut = 0;
    std::uint64_t censored = 0;
  };
  const auto bins = static_cast<std::size_t>(n_max);
  auto chunks = std::visit(
      [&](const auto& law) {
        return run_chunks<Acc>(reps, options, [&](Acc& acc, std::uint64_t i) {
          if (acc.counts.empty()) acc.counts.assign(bins, 0);
          RngStream rng(seed, i);
          double s = 0.0;
          for (std::int64_t n = 1; n <= step_cap; ++n) {
            s += law.sample(rng);
            if (s > 0.0) {
              if (n <= n_max)
                ++acc.counts[static_cast<std::size_t>(n - 1)];
              else
                ++acc.beyond;
              return;
            }
            if (-s > gap) {
              ++acc.cut;
              return;
            }
          }
          ++acc.censored;
        });
      },
      dist.kind());

  out.counts.assign(bins, 0);
  for (const auto& c : chunks) {
    for (std::size_t j = 0; j < c.counts.size(); ++j) out.counts[j] += c.counts[j];
    out.beyond += c.beyond;
    out.infinite_by_cutoff += c.cut;
    out.censored += c.censored;
  }
  return out;
}

Estimate estimate_max_of_iid(const Sampler& sampler, std::int64_t n, std::uint64_t reps, std::uint64_t seed,
                             const RunOptions& options) {
  check_reps(reps, options);
  if (n < 1) throw DomainError("max of iid: n must be at least 1");
  struct Acc {
    double sum = 0.0;
    double sum_sq = 0.0;
  };
  auto chunks = run_chunks<Acc>(reps, options, [&](Acc& acc, std::uint64_t i) {
    RngStream rng(seed, i);
    double m = 0.0;
    for (std::int64_t j = 0; j < n; ++j) m = std::max(m, sampler(rng));
    acc.sum += m;
    acc.sum_sq += m * m;
  });
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const auto& c : chunks) {
    sum += c.sum;
    sum_sq += c.sum_sq;
  }
  return mean_estimate(sum, sum_sq, reps, seed, options.chunk_size);
}

Estimate estimate_max_of_iid(const walks::StepDistribution& dist, std::int64_t n, std::uint64_t reps,
                             std::uint64_t seed, const RunOptions& options) {
  return estimate_max_of_iid([&dist](RngStream& rng) { return dist.sample(rng); }, n, reps, seed, options);
}

}  // namespace driftmax::montecarlo
