#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace driftmax::cli {

struct CheckResult {
  int number = 0;
  std::string id;
  std::string title;
  bool pass = false;
  /// One line each: what was measured against what was required.
  std::vector<std::string> lines;
  double elapsed_s = 0.0;
  double budget_s = 0.0;
};

struct CheckInfo {
  int number;
  std::string id;
  std::string title;
  double budget_s;
};

/// The eleven acceptance checks in order.
const std::vector<CheckInfo>& check_catalog();

/// Runs one check by id. Throws ConfigError for an unknown id. A check that
/// throws internally is reported as failed with the message.
CheckResult run_check(const std::string& id, std::uint64_t seed, unsigned threads);

/// "PASS"/"FAIL" summary line followed by indented detail lines.
std::string format_check(const CheckResult& result, bool verbose);

}  // namespace driftmax::cli
