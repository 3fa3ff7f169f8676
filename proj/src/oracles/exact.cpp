#include "driftmax/oracles/exact.hpp"

#include <cmath>
#include <numbers>

#include "driftmax/error.hpp"
#include "driftmax/numerics/normal.hpp"
#include "driftmax/numerics/special_functions.hpp"

namespace driftmax::oracles {

namespace {

void require_rates(double alpha, double beta, const char* who) {
  if (!(beta > 0.0) || !(alpha > beta) || !std::isfinite(alpha))
    throw DomainError(std::string(who) + ": require alpha > beta > 0");
}

// log of α^{n−1}β^n/(α+β)^{2n−1} without the Catalan factor.
double log_weight(double alpha, double beta, double n) {
  return (n - 1.0) * std::log(alpha) + n * std::log(beta) - (2.0 * n - 1.0) * std::log(alpha + beta);
}

}  // namespace

double exp_sup_cdf(double alpha, double beta, double x) {
  require_rates(alpha, beta, "exp_sup_cdf");
  if (!(x >= 0.0)) throw DomainError("exp_sup_cdf: x must be nonnegative");
  return 1.0 - beta / alpha * std::exp(-(alpha - beta) * x);
}

double ladder_interval_pmf(double alpha, double beta, std::uint64_t n) {
  require_rates(alpha, beta, "ladder_interval_pmf");
  if (n == 0) throw DomainError("ladder_interval_pmf: n must be positive");
  const double k = static_cast<double>(n - 1);
  const double log_catalan = numerics::log_gamma(2.0 * k + 1.0) - numerics::log_gamma(k + 2.0) - numerics::log_gamma(k + 1.0);
  return std::exp(log_catalan + log_weight(alpha, beta, static_cast<double>(n)));
}

double ladder_infinite_mass(double alpha, double beta) {
  require_rates(alpha, beta, "ladder_infinite_mass");
  return 1.0 - beta / alpha;
}

LadderNormalization ladder_normalization(double alpha, double beta, double tail_tol) {
  require_rates(alpha, beta, "ladder_normalization");
  // Consecutive terms shrink by at most r = 4αβ/(α+β)² < 1.
  const double r = 4.0 * alpha * beta / ((alpha + beta) * (alpha + beta));
  double log_catalan = 0.0;
  double sum = 0.0;
  for (std::uint64_t n = 1; n <= 100000000; ++n) {
    if (n > 1) {
      const double k = static_cast<double>(n - 1);
      log_catalan += std::log(2.0 * (2.0 * k - 1.0) / (k + 1.0));
    }
    const double term = std::exp(log_catalan + log_weight(alpha, beta, static_cast<double>(n)));
    sum += term;
    const double tail = term * r / (1.0 - r);
    if (tail < tail_tol) return {n, sum, tail, sum + ladder_infinite_mass(alpha, beta)};
  }
  throw ConvergenceError("ladder_normalization: tail did not fall below tolerance", sum, 1.0);
}

double ladder_epoch_mean_time(double alpha, double beta) {
  require_rates(alpha, beta, "ladder_epoch_mean_time");
  const double mu = (beta - alpha) / (alpha * beta);
  return 1.0 / (alpha * beta * mu * mu);
}

double bm_max_cdf(double mu, double t, double b) {
  if (!(t > 0.0) || !(b > 0.0)) throw DomainError("bm_max_cdf: require t > 0 and b > 0");
  if (std::isinf(b)) return 1.0;
  const double st = std::sqrt(t);
  const double direct = numerics::normal_cdf((-b + mu * t) / st);
  const double reflected = std::exp(2.0 * mu * b + numerics::log_normal_cdf((-b - mu * t) / st));
  return std::max(0.0, 1.0 - (direct + reflected));
}

double bm_max_cdf_integral(double mu_eff, double b, const numerics::Quadrature& q) {
  if (!(b > 0.0)) throw DomainError("bm_max_cdf_integral: b must be positive");
  if (!(mu_eff < 0.0)) throw DomainError("bm_max_cdf_integral: mu_eff must be negative");
  const double mu2 = mu_eff * mu_eff;
  const double b2 = b * b;
  auto density = [&](double s) {
    return std::exp(-0.5 * b2 / s - 0.5 * mu2 * s) / std::sqrt(2.0 * std::numbers::pi * s * s * s);
  };
  const double integral = numerics::integrate_to_infinity(density, 1.0, q).value;
  return b * std::exp(b * mu_eff) * integral - std::expm1(2.0 * b * mu_eff);
}

double gamblers_ruin_up(double p, std::int64_t y) { return gamblers_ruin_up(p, y, y); }

double gamblers_ruin_up(double p, std::int64_t up, std::int64_t down) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("gamblers_ruin_up: p must lie in (0, 1)");
  if (up < 1 || down < 1) throw DomainError("gamblers_ruin_up: barriers must be positive integers");
  const double total = static_cast<double>(up + down);
  if (p == 0.5) return static_cast<double>(down) / total;
  // ρ = q/p; P(up first from 0) = (1 − ρ^down)/(1 − ρ^total).
  const double log_rho = std::log((1.0 - p) / p);
  return std::expm1(static_cast<double>(down) * log_rho) / std::expm1(total * log_rho);
}

}  // namespace driftmax::oracles
