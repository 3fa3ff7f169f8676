#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "driftmax/error.hpp"
#include "driftmax/montecarlo/estimate.hpp"
#include "driftmax/walks/step_distribution.hpp"

namespace driftmax::cli {

/// Bad flags or config contents; maps to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::uint64_t kDefaultReps = 100000;

/// One simulate row. Estimator names: max_le, truncation, hitting_tail,
/// exit_up, trial, ladder_infinite, max_iid.
struct ExperimentSpec {
  std::string name;
  std::string dist;
  std::uint64_t N = 0;
  double x = 0.0;
  std::uint64_t reps = kDefaultReps;
  std::uint64_t seed = 1;
  std::uint64_t chunk_size = montecarlo::kDefaultChunkSize;
  std::optional<double> w;
  std::string estimator = "max_le";
  std::string method = "auto";
  double cutoff = 1e-12;
  /// hitting_tail and exit_up.
  std::optional<double> y;
  /// hitting_tail.
  std::optional<double> k;
  /// exit_up; defaults to infinity.
  std::optional<double> horizon;
  /// ladder_infinite step cap.
  std::int64_t step_cap = 1'000'000;
};

/// Applies key=value pairs (keys as in the config file) onto spec; throws
/// ConfigError on unknown keys or unparseable values.
void apply_settings(ExperimentSpec& spec, const std::map<std::string, std::string>& settings);

/// Throws ConfigError unless `dist` names a distribution and the settings are complete
/// for its estimator.
void validate_spec(const ExperimentSpec& spec);

struct ExperimentRow {
  ExperimentSpec spec;
  double mu = 0.0;
  montecarlo::Estimate estimate;
  double elapsed_ms = 0.0;
  /// "ok" or "error: <reason>".
  std::string status = "ok";
  std::optional<double> oracle;
};

/// Runs one experiment. Estimator precondition failures are reported in
/// status rather than thrown.
ExperimentRow run_experiment(const ExperimentSpec& spec, unsigned threads);

/// Reference value for the row's quantity when a closed form exists.
std::optional<double> experiment_oracle(const ExperimentSpec& spec);

struct CsvOptions {
  bool timing = false;
  bool oracle = false;
  bool ratio = false;
};

void write_csv_header(std::ostream& out, const CsvOptions& options);
/// Numbers use the shortest round-trip form, so output is locale-independent.
void write_csv_row(std::ostream& out, const ExperimentRow& row, const CsvOptions& options);

/// The same family with its first parameter moved so the step mean equals mu.
walks::StepDistribution with_mean(const walks::StepDistribution& dist, double mu);

std::string version_string();

}  // namespace driftmax::cli
