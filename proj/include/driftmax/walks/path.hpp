#pragma once

#include <cstdint>
#include <limits>
#include <variant>

#include "driftmax/error.hpp"
#include "driftmax/walks/step_distribution.hpp"

namespace driftmax::walks {

struct PathMax {
  bool max_reached;
  /// max_{1≤m≤n} S_m if the level was never passed; otherwise the first value above it.
  double running_max;
};

/// Simulates S_1..S_n, stopping at the first S_m > level_x.
template <class Law>
PathMax sample_path_max(const Law& law, std::int64_t n_steps, double level_x, RngStream& rng) {
  if (n_steps <= 0) throw DomainError("sample_path_max: n_steps must be positive");
  double s = 0.0;
  double running_max = -std::numeric_limits<double>::infinity();
  for (std::int64_t m = 0; m < n_steps; ++m) {
    s += law.sample(rng);
    if (s > running_max) {
      running_max = s;
      if (s > level_x) return {true, s};
    }
  }
  return {false, running_max};
}

inline PathMax sample_path_max(const StepDistribution& dist, std::int64_t n_steps, double level_x, RngStream& rng) {
  return std::visit([&](const auto& law) { return sample_path_max(law, n_steps, level_x, rng); }, dist.kind());
}

}  // namespace driftmax::walks
