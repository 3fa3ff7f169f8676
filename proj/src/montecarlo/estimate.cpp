#include "driftmax/montecarlo/estimate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "driftmax/error.hpp"

namespace driftmax::montecarlo {

Interval wilson_interval(std::uint64_t successes, std::uint64_t n, double z) {
  if (n == 0) throw DomainError("wilson_interval: n must be positive");
  if (successes > n) throw DomainError("wilson_interval: successes exceed n");
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  double lo = successes == 0 ? 0.0 : std::clamp(center - half, 0.0, 1.0);
  double hi = successes == n ? 1.0 : std::clamp(center + half, 0.0, 1.0);
  return {std::min(lo, p), std::max(hi, p)};
}

namespace {

std::uint64_t chunk_count(std::uint64_t reps, std::uint64_t chunk_size) {
  return reps / chunk_size + (reps % chunk_size != 0 ? 1 : 0);
}

}  // namespace

Estimate proportion_estimate(std::uint64_t successes, std::uint64_t reps, std::uint64_t seed,
                             std::uint64_t chunk_size) {
  if (reps == 0 || chunk_size == 0) throw DomainError("proportion_estimate: reps and chunk_size must be positive");
  Estimate e;
  e.reps = reps;
  e.successes = successes;
  e.p_hat = static_cast<double>(successes) / static_cast<double>(reps);
  e.std_err = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(reps));
  const auto ci = wilson_interval(successes, reps);
  e.ci_lo = ci.lo;
  e.ci_hi = ci.hi;
  e.seed = seed;
  e.chunk_size = chunk_size;
  e.n_chunks = chunk_count(reps, chunk_size);
  return e;
}

Estimate mean_estimate(double sum, double sum_sq, std::uint64_t reps, std::uint64_t seed, std::uint64_t chunk_size) {
  if (reps == 0 || chunk_size == 0) throw DomainError("mean_estimate: reps and chunk_size must be positive");
  const double n = static_cast<double>(reps);
  Estimate e;
  e.is_probability = false;
  e.reps = reps;
  e.p_hat = sum / n;
  const double var = reps > 1 ? std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0)) : 0.0;
  e.std_err = std::sqrt(var / n);
  e.ci_lo = e.p_hat - kIntervalZ * e.std_err;
  e.ci_hi = e.p_hat + kIntervalZ * e.std_err;
  e.seed = seed;
  e.chunk_size = chunk_size;
  e.n_chunks = chunk_count(reps, chunk_size);
  return e;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DRIFTMAX_THREADS")) {
    unsigned value = 0;
    const char* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace driftmax::montecarlo
