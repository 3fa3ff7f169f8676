#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "driftmax/walks/assumptions.hpp"
#include "driftmax/walks/step_distribution.hpp"

namespace driftmax::constants {

struct LedgerEntry {
  std::string id;           // "a", "b.1", ...
  std::string description;  // the inequality in symbols
  std::string instantiated; // the inequality with numbers substituted
  double lhs;
  double rhs;
  bool pass;
};

struct FeasibilityLedger {
  std::uint64_t N;
  double mu;
  std::vector<LedgerEntry> entries;
  bool pass;
  /// Smallest N ≤ 2^63 at which every entry passes (μ held fixed), if any.
  std::optional<std::uint64_t> minimal_N;
};

/// Every large-N condition used along the proof, instantiated at params.N and
/// μ = dist.mean(). Never throws for valid params.
FeasibilityLedger n0_ledger(const walks::StepDistribution& dist, const walks::AssumptionParams& params);

}  // namespace driftmax::constants
