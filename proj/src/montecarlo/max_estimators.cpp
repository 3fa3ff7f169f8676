#include <cmath>
#include <limits>
#include <variant>
#include <vector>

#include "driftmax/error.hpp"
#include "driftmax/montecarlo/engine.hpp"
#include "driftmax/montecarlo/estimators.hpp"
#include "driftmax/numerics/sampling.hpp"

namespace driftmax::montecarlo {

using numerics::RngStream;
using numerics::uint128;

void ExperimentConfig::validate() const {
  if (reps < 1) throw DomainError("experiment: reps must be at least 1");
  if (chunk_size < 1) throw DomainError("experiment: chunk_size must be at least 1");
  if (N < 1) throw DomainError("experiment: N must be at least 1");
  if (std::isnan(x)) throw DomainError("experiment: x is NaN");
  if (w && !(*w > 0.0)) throw DomainError("experiment: truncation w must be positive");
  if (!(cutoff_epsilon >= 0.0 && cutoff_epsilon < 1.0)) throw DomainError("experiment: cutoff_epsilon must lie in [0, 1)");
}

MaxMethod resolve_method(const ExperimentConfig& config) {
  const bool gaussian = std::holds_alternative<walks::GaussianShift>(config.dist.kind());
  if (config.method == MaxMethod::bridge) {
    if (!gaussian) throw DomainError("bridge method needs Gaussian steps");
    if (config.w) throw DomainError("bridge method does not support truncation");
    return MaxMethod::bridge;
  }
  if (config.method == MaxMethod::stepwise) return MaxMethod::stepwise;
  return gaussian && !config.w && config.x > 0.0 ? MaxMethod::bridge : MaxMethod::stepwise;
}

namespace {

struct Count {
  std::uint64_t hits = 0;
};

Estimate merge_counts(const std::vector<Count>& chunks, const ExperimentConfig& config) {
  std::uint64_t hits = 0;
  for (const auto& c : chunks) hits += c.hits;
  return proportion_estimate(hits, config.reps, config.seed, config.chunk_size);
}

/// Distance below the level beyond which a path is abandoned, or +inf.
double cutoff_gap(const walks::StepDistribution& dist, double epsilon) {
  if (epsilon <= 0.0) return std::numeric_limits<double>::infinity();
  const auto root = dist.lundberg_root();
  if (!root || !(*root > 0.0)) return std::numeric_limits<double>::infinity();
  return -std::log(epsilon) / *root;
}

template <class Law>
bool stepwise_exceeds(const Law& law, std::uint64_t n, double x, std::optional<double> w, double gap,
                      RngStream& rng) {
  double s = 0.0;
  if (w) {
    const double floor = -*w;
    for (std::uint64_t m = 0; m < n; ++m) {
      s += std::max(law.sample(rng), floor);
      if (s > x) return true;
    }
    return false;
  }
  for (std::uint64_t m = 0; m < n; ++m) {
    s += law.sample(rng);
    if (s > x) return true;
    if (x - s > gap) return false;
  }
  return false;
}

// Gaussian walks are Brownian motion sampled at integer times, so the walk can
// be generated coarse to fine: time is cut into blocks of kBlock steps whose
// endpoints are drawn in order, and each block is refined by drawing bridge
// midpoints. A sub-interval (a, b) whose endpoints are both at or below x is
// dropped once the Brownian bridge between them crosses x with probability
// below epsilon; the walk's interior points lie on that bridge, so the bias
// per dropped interval is at most epsilon. Each draw uses a counter keyed by
// (block, heap index), which makes every S_m independent of N and x.
constexpr int kBlockLog = 16;
constexpr std::uint64_t kBlock = std::uint64_t{1} << kBlockLog;

struct BridgeNode {
  std::uint64_t heap;
  std::uint64_t a;
  std::uint64_t b;
  double sa;
  double sb;
};

class BridgeWalk {
 public:
  BridgeWalk(const walks::GaussianShift& law, std::uint64_t n, double x, double epsilon, double gap)
      : mu_(law.mu), sigma2_(law.sigma2), sigma_(law.sigma), n_(n), x_(x), gap_(gap),
        prune_(epsilon > 0.0 ? -std::log(epsilon) : std::numeric_limits<double>::infinity()) {}

  bool exceeds(RngStream& rng, std::vector<BridgeNode>& stack) const {
    const double block_sd = sigma_ * std::sqrt(static_cast<double>(kBlock));
    double s = 0.0;
    for (std::uint64_t j = 0; j * kBlock < n_; ++j) {
      const std::uint64_t a = j * kBlock;
      const std::uint64_t b = a + kBlock;
      const double sb = s + mu_ * static_cast<double>(kBlock) + block_sd * draw(rng, j, 0);
      if (b <= n_ && sb > x_) return true;
      if (refine(rng, stack, j, a, s, b, sb)) return true;
      s = sb;
      if (b >= n_) break;
      if (x_ - s > gap_) return false;
    }
    return false;
  }

 private:
  static double draw(RngStream& rng, std::uint64_t block, std::uint64_t heap) {
    rng.seek((static_cast<uint128>(block) << 64) | (static_cast<uint128>(heap) << 20));
    return numerics::standard_normal(rng);
  }

  bool refine(RngStream& rng, std::vector<BridgeNode>& stack, std::uint64_t block, std::uint64_t a, double sa,
              std::uint64_t b, double sb) const {
    stack.clear();
    stack.push_back({1, a, b, sa, sb});
    while (!stack.empty()) {
      const BridgeNode node = stack.back();
      stack.pop_back();
      const std::uint64_t len = node.b - node.a;
      if (len < 2 || node.a >= n_) continue;
      const double k = static_cast<double>(len);
      if (node.b <= n_ && node.sa <= x_ && node.sb <= x_ &&
          2.0 * (x_ - node.sa) * (x_ - node.sb) > prune_ * sigma2_ * k)
        continue;
      const std::uint64_t m = node.a + len / 2;
      const double sm = 0.5 * (node.sa + node.sb) + 0.5 * sigma_ * std::sqrt(k) * draw(rng, block, node.heap);
      if (m <= n_ && sm > x_) return true;
      stack.push_back({2 * node.heap + 1, m, node.b, sm, node.sb});
      stack.push_back({2 * node.heap, node.a, m, node.sa, sm});
    }
    return false;
  }

  double mu_;
  double sigma2_;
  double sigma_;
  std::uint64_t n_;
  double x_;
  double gap_;
  double prune_;
};

struct BridgeCount {
  std::uint64_t hits = 0;
  std::vector<BridgeNode> stack;
};

}  // namespace

Estimate estimate_max_le(const ExperimentConfig& config) {
  config.validate();
  const MaxMethod method = resolve_method(config);
  const double gap = config.w ? std::numeric_limits<double>::infinity() : cutoff_gap(config.dist, config.cutoff_epsilon);

  if (method == MaxMethod::bridge) {
    const BridgeWalk walk(std::get<walks::GaussianShift>(config.dist.kind()), config.N, config.x,
                          config.cutoff_epsilon, gap);
    auto chunks = run_chunks<BridgeCount>(config.reps, config.run_options(), [&](BridgeCount& acc, std::uint64_t i) {
      RngStream rng(config.seed, i);
      if (!walk.exceeds(rng, acc.stack)) ++acc.hits;
    });
    std::uint64_t hits = 0;
    for (const auto& c : chunks) hits += c.hits;
    return proportion_estimate(hits, config.reps, config.seed, config.chunk_size);
  }

  auto chunks = std::visit(
      [&](const auto& law) {
        return run_chunks<Count>(config.reps, config.run_options(), [&](Count& acc, std::uint64_t i) {
          RngStream rng(config.seed, i);
          if (!stepwise_exceeds(law, config.N, config.x, config.w, gap, rng)) ++acc.hits;
        });
      },
      config.dist.kind());
  return merge_counts(chunks, config);
}

Estimate estimate_truncation_event(const ExperimentConfig& config) {
  config.validate();
  if (!config.w) throw DomainError("estimate_truncation_event: w must be set");
  const double floor = -*config.w;
  auto chunks = std::visit(
      [&](const auto& law) {
        return run_chunks<Count>(config.reps, config.run_options(), [&](Count& acc, std::uint64_t i) {
          RngStream rng(config.seed, i);
          for (std::uint64_t m = 0; m < config.N; ++m) {
            if (law.sample(rng) < floor) {
              ++acc.hits;
              return;
            }
          }
        });
      },
      config.dist.kind());
  return merge_counts(chunks, config);
}

}  // namespace driftmax::montecarlo
