#include "driftmax/oracles/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "driftmax/error.hpp"

namespace driftmax::oracles {

namespace {

BoundValue from_log(double log_value, std::vector<std::pair<std::string, double>> components) {
  return {std::exp(log_value), log_value, log_value >= 0.0, std::move(components)};
}

}  // namespace

BoundValue thm_bound(const constants::Magnitude& C, std::uint64_t N, double x, double mu) {
  if (N < 2) throw DomainError("thm_bound: N must be at least 2");
  if (!(x >= 0.0)) throw DomainError("thm_bound: x must be nonnegative");
  if (!(mu <= 0.0)) throw DomainError("thm_bound: mu must be nonpositive");
  const double n = static_cast<double>(N);
  const double rate = std::max(std::abs(mu), 1.0 / std::sqrt(n));
  const double factor = x * std::log(n) * rate;
  if (factor == 0.0) return {0.0, -std::numeric_limits<double>::infinity(), false, {{"C", C.value()}, {"factor", 0.0}}};
  return from_log(C.log() + std::log(factor), {{"C", C.value()}, {"factor", factor}});
}

BoundValue thm_bound(double C, std::uint64_t N, double x, double mu) {
  return thm_bound(constants::Magnitude::from_value(C), N, x, mu);
}

BoundValue kmt_bound(double x, std::uint64_t N, double mu, double sigma, double C1) {
  const double n = static_cast<double>(N);
  const double L = std::log(n);
  if (!(L > 4.0)) throw DomainError("kmt_bound: N must exceed e^4");
  if (!(x > 0.0)) throw DomainError("kmt_bound: x must be positive");
  if (!(mu < 0.0)) throw DomainError("kmt_bound: mu must be negative");
  if (!(sigma > 0.0) || !(C1 > 0.0)) throw DomainError("kmt_bound: sigma and C1 must be positive");
  const double power = C1 * std::exp((1.0 - 0.5 * L) * L);
  const double drift = C1 * (sigma * x + sigma * sigma * L) / (std::pow(n, 1.5) * mu * mu) *
                       std::exp((x / sigma + L) * mu / sigma);
  const double escape = -std::expm1(2.0 * (x / sigma + C1 * L) * mu / sigma);
  const double value = power + drift + escape;
  return {value, std::log(value), value >= 1.0, {{"power", power}, {"drift", drift}, {"escape", escape}}};
}

double berry_esseen_gap(double sigma2, double rho_abs3, std::uint64_t n) {
  if (!(sigma2 > 0.0) || !(rho_abs3 > 0.0) || n == 0) throw DomainError("berry_esseen_gap: inputs must be positive");
  return 3.0 * rho_abs3 / (sigma2 * std::sqrt(sigma2) * std::sqrt(static_cast<double>(n)));
}

double hitting_tail_bound(double c_tau, double k) {
  if (!(k >= 0.0)) throw DomainError("hitting_tail_bound: k must be nonnegative");
  return 2.0 * std::exp(-c_tau * k);
}

double max_of_iid_bound(double c1, double C1, std::uint64_t n) {
  if (!(c1 > 0.0) || !(C1 > 0.0)) throw DomainError("max_of_iid_bound: constants must be positive");
  return std::log(C1 * static_cast<double>(n) + 1.0) / c1;
}

double exit_lower_bound(const constants::TheoremConstants& tc, const walks::AssumptionParams& params, double y,
                        double H_N, std::optional<double> truncation_w) {
  if (!(y > 0.0) || !(H_N >= 1.0)) throw DomainError("exit_lower_bound: need y > 0 and H_N >= 1");
  const double log_h = std::log(H_N);
  const auto& C = truncation_w ? tc.C11 : tc.C10;
  const double log_first = C.log() - 0.5 * log_h + std::log(y + log_h * log_h);
  const double first = std::exp(log_first);
  const double tb = params.theta_bar;
  const double second = 2.0 / (tb * y) * std::log(std::exp(tb) * params.C_M * H_N + 1.0);
  double third = 0.0;
  if (truncation_w) third = H_N * params.C_M * std::exp(-tb * *truncation_w);
  return 0.5 * (1.0 - first - second - third);
}

GaussianLowerBound gaussian_lower_bound(double x, double mu, std::uint64_t N) {
  if (!(x >= 0.0)) throw DomainError("gaussian_lower_bound: x must be nonnegative");
  if (!(mu < 0.0)) throw DomainError("gaussian_lower_bound: mu must be negative");
  if (N < 1) throw DomainError("gaussian_lower_bound: N must be positive");
  const double a = x * std::abs(mu) / std::sqrt(static_cast<double>(N));
  const double exact = -std::expm1(-2.0 * a);
  return {a, exact, exact >= a};
}

}  // namespace driftmax::oracles
