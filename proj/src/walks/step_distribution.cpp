#include "driftmax/walks/step_distribution.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <numbers>
#include <string>
#include <vector>

#include "driftmax/error.hpp"
#include "driftmax/numerics/normal.hpp"
#include "driftmax/numerics/special_functions.hpp"

namespace driftmax::walks {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

constexpr std::array<double, 4> kFactorial = {1.0, 1.0, 2.0, 6.0};
constexpr std::array<std::array<double, 4>, 4> kBinomial = {
    {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}}};

}  // namespace

GaussianShift::GaussianShift(double mu_, double sigma2_) : mu(mu_), sigma2(sigma2_), sigma(std::sqrt(sigma2_)) {
  require(std::isfinite(mu), "gaussian: mean must be finite");
  require(positive_finite(sigma2), "gaussian: variance must be positive");
}

ExpDifference::ExpDifference(double alpha_, double beta_)
    : alpha(alpha_), beta(beta_), inv_alpha(1.0 / alpha_), inv_beta(1.0 / beta_) {
  require(positive_finite(alpha) && positive_finite(beta), "expdiff: rates must be positive");
}

LogGammaDifference::LogGammaDifference(double alpha_, double beta_)
    : alpha(alpha_), beta(beta_), gamma_a(positive_finite(alpha_) ? alpha_ : 1.0),
      gamma_b(positive_finite(beta_) ? beta_ : 1.0) {
  require(positive_finite(alpha) && positive_finite(beta), "loggamma: shapes must be positive");
}

Rademacher::Rademacher(double p_) : p(p_), threshold(0) {
  require(p > 0.0 && p < 1.0, "rademacher: p must lie in (0, 1)");
  threshold = static_cast<std::uint64_t>(std::ldexp(p, 64));
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return {buf.data(), res.ptr};
}

std::string StepDistribution::spec() const {
  return std::visit(Overloaded{
                        [](const GaussianShift& d) { return "gaussian(" + format_real(d.mu) + "," + format_real(d.sigma2) + ")"; },
                        [](const ExpDifference& d) { return "expdiff(" + format_real(d.alpha) + "," + format_real(d.beta) + ")"; },
                        [](const LogGammaDifference& d) {
                          return "loggamma(" + format_real(d.alpha) + "," + format_real(d.beta) + ")";
                        },
                        [](const Rademacher& d) { return "rademacher(" + format_real(d.p) + ")"; },
                    },
                    kind_);
}

double StepDistribution::mean() const {
  return std::visit(Overloaded{
                        [](const GaussianShift& d) { return d.mu; },
                        [](const ExpDifference& d) { return (d.beta - d.alpha) / (d.alpha * d.beta); },
                        [](const LogGammaDifference& d) { return numerics::digamma(d.alpha) - numerics::digamma(d.beta); },
                        [](const Rademacher& d) { return 2.0 * d.p - 1.0; },
                    },
                    kind_);
}

double StepDistribution::variance() const {
  return std::visit(Overloaded{
                        [](const GaussianShift& d) { return d.sigma2; },
                        [](const ExpDifference& d) { return 1.0 / (d.alpha * d.alpha) + 1.0 / (d.beta * d.beta); },
                        [](const LogGammaDifference& d) { return numerics::trigamma(d.alpha) + numerics::trigamma(d.beta); },
                        [](const Rademacher& d) { return 4.0 * d.p * (1.0 - d.p); },
                    },
                    kind_);
}

double StepDistribution::second_moment() const {
  const double mu = mean();
  return variance() + mu * mu;
}

std::pair<double, double> StepDistribution::mgf_domain() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(Overloaded{
                        [](const GaussianShift&) { return std::pair{-inf, inf}; },
                        [](const ExpDifference& d) { return std::pair{-d.beta, d.alpha}; },
                        [](const LogGammaDifference& d) { return std::pair{-d.alpha, d.beta}; },
                        [](const Rademacher&) { return std::pair{-inf, inf}; },
                    },
                    kind_);
}

bool StepDistribution::in_domain(double theta) const {
  const auto [lo, hi] = mgf_domain();
  return theta > lo && theta < hi;
}

double StepDistribution::mgf_deriv(double theta, int order) const {
  if (order < 0 || order > 3) throw DomainError("mgf_deriv: order must be in 0..3");
  if (!std::isfinite(theta) || !in_domain(theta))
    throw DomainError("mgf: theta=" + format_real(theta) + " outside the MGF domain of " + spec());
  if (theta == 0.0 && order == 0) return 1.0;
  return std::visit(
      Overloaded{
          [&](const GaussianShift& d) {
            const double m = std::exp(d.mu * theta + 0.5 * d.sigma2 * theta * theta);
            const double g = d.mu + d.sigma2 * theta;
            switch (order) {
              case 0: return m;
              case 1: return g * m;
              case 2: return (g * g + d.sigma2) * m;
              default: return (g * g * g + 3.0 * d.sigma2 * g) * m;
            }
          },
          [&](const ExpDifference& d) {
            // Leibniz rule on α/(α−θ) · β/(β+θ).
            const double ua = 1.0 / (d.alpha - theta);
            const double ub = 1.0 / (d.beta + theta);
            double total = 0.0;
            for (int j = 0; j <= order; ++j) {
              const int k = order - j;
              const double fa = kFactorial[static_cast<std::size_t>(j)] * d.alpha * std::pow(ua, j + 1);
              const double fb = (k % 2 ? -1.0 : 1.0) * kFactorial[static_cast<std::size_t>(k)] * d.beta * std::pow(ub, k + 1);
              total += kBinomial[static_cast<std::size_t>(order)][static_cast<std::size_t>(j)] * fa * fb;
            }
            return total;
          },
          [&](const LogGammaDifference& d) {
            using numerics::log_gamma;
            const double a = d.alpha + theta;
            const double b = d.beta - theta;
            const double m = std::exp((log_gamma(a) - log_gamma(d.alpha)) + (log_gamma(b) - log_gamma(d.beta)));
            if (order == 0) return m;
            const double l1 = numerics::digamma(a) - numerics::digamma(b);
            if (order == 1) return l1 * m;
            const double l2 = numerics::trigamma(a) + numerics::trigamma(b);
            if (order == 2) return (l2 + l1 * l1) * m;
            const double l3 = numerics::tetragamma(a) - numerics::tetragamma(b);
            return (l3 + 3.0 * l1 * l2 + l1 * l1 * l1) * m;
          },
          [&](const Rademacher& d) {
            const double up = d.p * std::exp(theta);
            const double down = (1.0 - d.p) * std::exp(-theta);
            return order % 2 ? up - down : up + down;
          },
      },
      kind_);
}

AbsThirdMoment StepDistribution::abs_third_moment() const {
  return std::visit(
      Overloaded{
          [](const GaussianShift& d) {
            const double m = d.mu / d.sigma;
            const double value =
                d.sigma2 * d.sigma *
                ((m * m * m + 3.0 * m) * (1.0 - 2.0 * numerics::normal_cdf(-m)) +
                 std::sqrt(2.0 / std::numbers::pi) * (m * m + 2.0) * std::exp(-0.5 * m * m));
            return AbsThirdMoment{value, 0.0};
          },
          [](const ExpDifference& d) {
            const double a = d.alpha, b = d.beta;
            return AbsThirdMoment{a * b / (a + b) * (6.0 / (a * a * a * a) + 6.0 / (b * b * b * b)), 0.0};
          },
          [](const LogGammaDifference& d) {
            constexpr int kDraws = 1000000;
            RngStream rng(0, 0);
            double sum = 0.0, sum_sq = 0.0;
            for (int i = 0; i < kDraws; ++i) {
              const double x = std::abs(d.sample(rng));
              const double c = x * x * x;
              sum += c;
              sum_sq += c * c;
            }
            const double mean = sum / kDraws;
            const double var = std::max(0.0, sum_sq / kDraws - mean * mean);
            return AbsThirdMoment{mean, std::sqrt(var / kDraws)};
          },
          [](const Rademacher&) { return AbsThirdMoment{1.0, 0.0}; },
      },
      kind_);
}

std::optional<double> StepDistribution::lundberg_root() const {
  if (!(mean() < 0.0)) return std::nullopt;
  return std::visit(Overloaded{
                        [](const GaussianShift& d) { return -2.0 * d.mu / d.sigma2; },
                        [](const ExpDifference& d) { return d.alpha - d.beta; },
                        [](const LogGammaDifference& d) { return d.beta - d.alpha; },
                        [](const Rademacher& d) { return std::log((1.0 - d.p) / d.p); },
                    },
                    kind_);
}

StepMoments step_moments(const StepDistribution& dist) {
  const auto third = dist.abs_third_moment();
  return {dist.mean(), dist.second_moment(), third.value, third.std_err};
}

StepDistribution parse_distribution(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  const auto open = s.find('(');
  if (open == std::string::npos || s.empty() || s.back() != ')')
    throw DomainError("distribution spec '" + std::string(text) + "': expected name(args)");
  const std::string name = s.substr(0, open);
  std::vector<double> args;
  std::string_view rest(s.data() + open + 1, s.size() - open - 2);
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    const auto res = std::from_chars(first, last, v);
    if (token.empty() || res.ec != std::errc() || res.ptr != last)
      throw DomainError("distribution spec '" + std::string(text) + "': bad number '" + std::string(token) + "'");
    args.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  auto arity = [&](std::size_t n) {
    if (args.size() != n)
      throw DomainError("distribution spec '" + std::string(text) + "': " + name + " takes " + std::to_string(n) +
                        " argument(s)");
  };
  if (name == "gaussian") {
    arity(2);
    return GaussianShift(args[0], args[1]);
  }
  if (name == "expdiff") {
    arity(2);
    return ExpDifference(args[0], args[1]);
  }
  if (name == "loggamma") {
    arity(2);
    return LogGammaDifference(args[0], args[1]);
  }
  if (name == "rademacher") {
    arity(1);
    return Rademacher(args[0]);
  }
  throw DomainError("distribution spec '" + std::string(text) + "': unknown law '" + name + "'");
}

}  // namespace driftmax::walks
