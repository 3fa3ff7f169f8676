#include "driftmax/constants/magnitude.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "driftmax/error.hpp"
#include "driftmax/walks/step_distribution.hpp"

namespace driftmax::constants {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

Magnitude Magnitude::from_value(double value) {
  if (!(value > 0.0)) throw DomainError("Magnitude: value must be positive");
  return from_log(std::log(value));
}

Magnitude Magnitude::from_log(double log_value) {
  if (std::isnan(log_value)) throw DomainError("Magnitude: log is NaN");
  if (std::isinf(log_value) && log_value > 0) return {kInf, kInf};
  return {log_value, log_value >= 0.0 ? std::log(log_value) : kNaN};
}

Magnitude Magnitude::from_log_log(double log_log_value) {
  if (std::isnan(log_log_value)) throw DomainError("Magnitude: log-log is NaN");
  return {std::exp(log_log_value), log_log_value};
}

double Magnitude::value() const { return std::exp(log_); }

bool Magnitude::overflow() const { return !std::isfinite(value()); }

Magnitude Magnitude::exp() const { return {value(), log_}; }

Magnitude Magnitude::scaled(double factor) const {
  if (!(factor > 0.0)) throw DomainError("Magnitude: scale factor must be positive");
  if (std::isfinite(log_)) return from_log(log_ + std::log(factor));
  return from_log_log(log_log_);
}

Magnitude operator+(const Magnitude& a, const Magnitude& b) {
  if (std::isfinite(a.log_) && std::isfinite(b.log_)) {
    const double hi = std::max(a.log_, b.log_);
    const double lo = std::min(a.log_, b.log_);
    return Magnitude::from_log(hi + std::log1p(std::exp(lo - hi)));
  }
  // At least one log overflowed: the smaller term cannot move ln ln of the sum.
  return Magnitude::from_log_log(std::max(a.log_log_, b.log_log_));
}

bool operator<(const Magnitude& a, const Magnitude& b) {
  if (std::isfinite(a.log_) || std::isfinite(b.log_)) return a.log_ < b.log_;
  return a.log_log_ < b.log_log_;
}

std::string Magnitude::to_string() const {
  const double v = value();
  if (std::isfinite(v)) return walks::format_real(v);
  if (std::isfinite(log_)) return "exp(" + walks::format_real(log_) + ")";
  return "exp(exp(" + walks::format_real(log_log_) + "))";
}

double relative_log_difference(const Magnitude& a, const Magnitude& b) {
  if (std::isfinite(a.log()) && std::isfinite(b.log())) {
    const double scale = std::max(std::abs(a.log()), std::abs(b.log()));
    return scale == 0.0 ? 0.0 : std::abs(a.log() - b.log()) / scale;
  }
  return std::abs(std::expm1(a.log_log() - b.log_log()));
}

}  // namespace driftmax::constants
