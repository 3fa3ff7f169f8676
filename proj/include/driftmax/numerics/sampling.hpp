#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "driftmax/numerics/rng.hpp"

namespace driftmax::numerics {

namespace detail {

// 128-layer ziggurat for the standard normal (Marsaglia & Tsang 2000, with
// the independent-bits layout of Doornik's ZIGNOR).
struct NormalZiggurat {
  static constexpr int kLayers = 128;
  static constexpr double kTailStart = 3.442619855899;
  static constexpr double kLayerArea = 9.91256303526217e-3;
  std::array<double, kLayers + 1> x{};
  std::array<double, kLayers> ratio{};
};

extern const NormalZiggurat kNormalZiggurat;

double normal_tail(double start, bool negative, RngStream& rng) noexcept;

}  // namespace detail

/// Exact N(0,1) draw.
inline double standard_normal(RngStream& rng) noexcept {
  const auto& z = detail::kNormalZiggurat;
  for (;;) {
    const std::uint64_t w = rng.next_u64();
    const unsigned layer = static_cast<unsigned>(w & 0x7FU);
    const double u = (static_cast<double>(w >> 11) + 0.5) * 0x1.0p-52 - 1.0;
    if (std::fabs(u) < z.ratio[layer]) return u * z.x[layer];
    if (layer == 0) return detail::normal_tail(z.x[1], u < 0.0, rng);
    const double v = u * z.x[layer];
    const double f0 = std::exp(-0.5 * (z.x[layer] * z.x[layer] - v * v));
    const double f1 = std::exp(-0.5 * (z.x[layer + 1] * z.x[layer + 1] - v * v));
    if (f1 + rng.next_uniform() * (f0 - f1) < 1.0) return v;
  }
}

/// Exact Exp(1) draw by inversion.
inline double standard_exponential(RngStream& rng) noexcept { return -std::log(rng.next_uniform()); }

double sample_normal(double mean, double variance, RngStream& rng);
double sample_exponential(double rate, RngStream& rng);

/// Marsaglia–Tsang squeeze/rejection sampler for Gamma(shape, 1). Shapes
/// below one are boosted to shape + 1 and corrected by U^{1/shape}.
class GammaSampler {
 public:
  explicit GammaSampler(double shape);

  double shape() const noexcept { return shape_; }

  double operator()(RngStream& rng) const noexcept {
    const double g = core(rng);
    return boosted_ ? g * std::pow(rng.next_uniform(), 1.0 / shape_) : g;
  }

  /// log of a Gamma(shape) draw, computed without underflow for small shapes.
  double log_sample(RngStream& rng) const noexcept {
    const double log_g = std::log(core(rng));
    return boosted_ ? log_g + std::log(rng.next_uniform()) / shape_ : log_g;
  }

 private:
  // Gamma(d + 1/3) draw, d >= 2/3.
  double core(RngStream& rng) const noexcept {
    for (;;) {
      double z = 0.0;
      double v = 0.0;
      do {
        z = standard_normal(rng);
        v = 1.0 + c_ * z;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = rng.next_uniform();
      const double z2 = z * z;
      if (u < 1.0 - 0.0331 * z2 * z2) return d_ * v;
      if (std::log(u) < 0.5 * z2 + d_ * (1.0 - v + std::log(v))) return d_ * v;
    }
  }

  double shape_;
  bool boosted_;
  double d_;
  double c_;
};

double sample_gamma(double shape, RngStream& rng);

}  // namespace driftmax::numerics
