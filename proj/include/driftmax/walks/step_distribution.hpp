#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>

#include "driftmax/numerics/rng.hpp"
#include "driftmax/numerics/sampling.hpp"

namespace driftmax::walks {

using numerics::RngStream;

/// X ~ N(mu, sigma2).
struct GaussianShift {
  double mu;
  double sigma2;
  double sigma;

  GaussianShift(double mu, double sigma2);
  double sample(RngStream& rng) const noexcept { return mu + sigma * numerics::standard_normal(rng); }
};

/// X = E − E' with E ~ Exp(alpha), E' ~ Exp(beta) independent.
struct ExpDifference {
  double alpha;
  double beta;

  ExpDifference(double alpha, double beta);
  double sample(RngStream& rng) const noexcept {
    const double up = -std::log(rng.next_uniform()) * inv_alpha;
    return up + std::log(rng.next_uniform()) * inv_beta;
  }

 private:
  double inv_alpha;
  double inv_beta;
};

/// X = log G − log G' with G ~ Gamma(alpha), G' ~ Gamma(beta) independent.
struct LogGammaDifference {
  double alpha;
  double beta;

  LogGammaDifference(double alpha, double beta);
  double sample(RngStream& rng) const noexcept { return gamma_a.log_sample(rng) - gamma_b.log_sample(rng); }

 private:
  numerics::GammaSampler gamma_a;
  numerics::GammaSampler gamma_b;
};

/// X = +1 with probability p, −1 otherwise.
struct Rademacher {
  double p;

  explicit Rademacher(double p);
  double sample(RngStream& rng) const noexcept { return rng.next_u64() < threshold ? 1.0 : -1.0; }

 private:
  std::uint64_t threshold;
};

struct AbsThirdMoment {
  double value;
  double std_err;  // 0 for closed forms
};

/// Immutable i.i.d. step law with exact moments and MGF derivatives.
class StepDistribution {
 public:
  using Kind = std::variant<GaussianShift, ExpDifference, LogGammaDifference, Rademacher>;

  template <class Law>
    requires std::is_constructible_v<Kind, Law>
  StepDistribution(Law law) : kind_(std::move(law)) {}  // NOLINT(google-explicit-constructor)

  const Kind& kind() const noexcept { return kind_; }

  /// Canonical spec string, e.g. "expdiff(1.2,1)".
  std::string spec() const;

  double mean() const;
  double variance() const;
  double second_moment() const;

  /// Open MGF domain (lo, hi); infinite ends are ±infinity.
  std::pair<double, double> mgf_domain() const;
  bool in_domain(double theta) const;

  double mgf(double theta) const { return mgf_deriv(theta, 0); }
  /// M^{(order)}(theta) for order 0..3. Throws DomainError outside the domain.
  double mgf_deriv(double theta, int order) const;

  /// E|X|^3. Closed form where known, otherwise a 10^6-draw Monte Carlo
  /// estimate on RngStream(0, 0) with its standard error.
  AbsThirdMoment abs_third_moment() const;

  /// Positive root θ* of M(θ) = 1, present only for negative drift.
  std::optional<double> lundberg_root() const;

  double sample(RngStream& rng) const {
    return std::visit([&](const auto& d) { return d.sample(rng); }, kind_);
  }

 private:
  Kind kind_;
};

struct StepMoments {
  double mu;
  double mu2;
  double mu3_abs;
  double mu3_abs_std_err;
};

StepMoments step_moments(const StepDistribution& dist);

/// Parses `gaussian(mu,sigma2)`, `expdiff(alpha,beta)`, `loggamma(alpha,beta)`
/// or `rademacher(p)`, case-insensitively. Throws DomainError on bad input.
StepDistribution parse_distribution(std::string_view text);

/// Shortest round-trip decimal text of a double.
std::string format_real(double value);

}  // namespace driftmax::walks
