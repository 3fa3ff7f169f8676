#pragma once

#include <limits>
#include <string>

namespace driftmax::constants {

/// A positive real held through its logarithms so that quantities such as
/// exp(e^{4000}) stay representable. `log` may be +inf when only `log_log`
/// is finite; `log_log` is NaN when the value is below 1.
class Magnitude {
 public:
  /// The number 1.
  Magnitude() : log_(0.0), log_log_(-std::numeric_limits<double>::infinity()) {}

  static Magnitude from_value(double value);
  static Magnitude from_log(double log_value);
  static Magnitude from_log_log(double log_log_value);

  /// The value itself; +inf on overflow.
  double value() const;
  double log() const { return log_; }
  double log_log() const { return log_log_; }
  bool overflow() const;

  /// e^{this}.
  Magnitude exp() const;
  /// this · factor, factor > 0.
  Magnitude scaled(double factor) const;
  friend Magnitude operator+(const Magnitude& a, const Magnitude& b);
  friend bool operator<(const Magnitude& a, const Magnitude& b);

  /// Plain decimal when finite, otherwise "exp(<log>)" or "exp(exp(<log_log>))".
  std::string to_string() const;

 private:
  Magnitude(double log_value, double log_log_value) : log_(log_value), log_log_(log_log_value) {}
  double log_;
  double log_log_;
};

/// Relative difference of the natural logarithms of two magnitudes.
double relative_log_difference(const Magnitude& a, const Magnitude& b);

}  // namespace driftmax::constants
