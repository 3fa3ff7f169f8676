#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "driftmax/cli/experiment.hpp"

namespace driftmax::cli {

inline double parse_real(std::string_view text, const std::string& what) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text == "inf" || text == "infinity") return INFINITY;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ConfigError("cannot parse " + what + " = '" + std::string(text) + "'");
  return value;
}

/// Nonnegative integer; accepts exponent notation such as 1e5 when exact.
inline std::uint64_t parse_count(std::string_view text, const std::string& what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc() && ptr == text.data() + text.size() && !text.empty()) return value;
  const double real = parse_real(text, what);
  if (!(real >= 0.0) || real >= 18446744073709551616.0 || real != std::floor(real))
    throw ConfigError(what + " must be a nonnegative integer, got '" + std::string(text) + "'");
  return static_cast<std::uint64_t>(real);
}

}  // namespace driftmax::cli
