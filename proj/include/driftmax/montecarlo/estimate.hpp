#pragma once

#include <cstdint>

namespace driftmax::montecarlo {

/// Two-sided 99.99% normal quantile used for every interval.
inline constexpr double kIntervalZ = 3.890591886413094;

inline constexpr std::uint64_t kDefaultChunkSize = 4096;

/// Execution knobs shared by every estimator. threads = 0 means
/// DRIFTMAX_THREADS if set and positive, otherwise the hardware count.
struct RunOptions {
  std::uint64_t chunk_size = kDefaultChunkSize;
  unsigned threads = 0;
};

struct Estimate {
  double p_hat = 0.0;
  std::uint64_t reps = 0;
  /// Number of paths where the event occurred; zero for mean estimates.
  std::uint64_t successes = 0;
  double std_err = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = 0;
  std::uint64_t n_chunks = 0;
  bool is_probability = true;
};

struct Interval {
  double lo;
  double hi;
};

/// Wilson score interval for `successes` out of `n`, clamped to [0, 1] and
/// widened if needed so it contains the point estimate.
Interval wilson_interval(std::uint64_t successes, std::uint64_t n, double z = kIntervalZ);

Estimate proportion_estimate(std::uint64_t successes, std::uint64_t reps, std::uint64_t seed,
                             std::uint64_t chunk_size);

/// Sample mean with SE = sd/sqrt(reps) and a normal interval.
Estimate mean_estimate(double sum, double sum_sq, std::uint64_t reps, std::uint64_t seed, std::uint64_t chunk_size);

/// Effective worker count for `requested` (see RunOptions).
unsigned resolve_threads(unsigned requested);

}  // namespace driftmax::montecarlo
