#include "driftmax/numerics/sampling.hpp"

#include <string>

#include "driftmax/error.hpp"

namespace driftmax::numerics {

namespace detail {

namespace {

NormalZiggurat build_normal_ziggurat() {
  constexpr int n = NormalZiggurat::kLayers;
  NormalZiggurat z;
  double f = std::exp(-0.5 * NormalZiggurat::kTailStart * NormalZiggurat::kTailStart);
  z.x[0] = NormalZiggurat::kLayerArea / f;
  z.x[1] = NormalZiggurat::kTailStart;
  z.x[n] = 0.0;
  for (int i = 2; i < n; ++i) {
    z.x[i] = std::sqrt(-2.0 * std::log(NormalZiggurat::kLayerArea / z.x[i - 1] + f));
    f = std::exp(-0.5 * z.x[i] * z.x[i]);
  }
  for (int i = 0; i < n; ++i) z.ratio[i] = z.x[i + 1] / z.x[i];
  return z;
}

}  // namespace

const NormalZiggurat kNormalZiggurat = build_normal_ziggurat();

double normal_tail(double start, bool negative, RngStream& rng) noexcept {
  double x = 0.0;
  double y = 0.0;
  do {
    x = std::log(rng.next_uniform()) / start;
    y = std::log(rng.next_uniform());
  } while (-2.0 * y < x * x);
  return negative ? x - start : start - x;
}

}  // namespace detail

double sample_normal(double mean, double variance, RngStream& rng) {
  if (!std::isfinite(mean) || !(variance > 0.0) || !std::isfinite(variance))
    throw DomainError("sample_normal: need finite mean and positive finite variance");
  return mean + std::sqrt(variance) * standard_normal(rng);
}

double sample_exponential(double rate, RngStream& rng) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw DomainError("sample_exponential: rate must be positive and finite");
  return standard_exponential(rng) / rate;
}

GammaSampler::GammaSampler(double shape) : shape_(shape), boosted_(shape < 1.0) {
  if (!(shape > 0.0) || !std::isfinite(shape))
    throw DomainError("gamma sampler: shape must be positive and finite, got " + std::to_string(shape));
  const double a = boosted_ ? shape + 1.0 : shape;
  d_ = a - 1.0 / 3.0;
  c_ = 1.0 / std::sqrt(9.0 * d_);
}

double sample_gamma(double shape, RngStream& rng) { return GammaSampler(shape)(rng); }

}  // namespace driftmax::numerics
