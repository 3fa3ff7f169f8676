#include "driftmax/cli/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <variant>

#include "driftmax/constants/theorem_constants.hpp"
#include "driftmax/montecarlo/estimators.hpp"
#include "driftmax/numerics/roots.hpp"
#include "driftmax/numerics/special_functions.hpp"
#include "driftmax/oracles/exact.hpp"
#include "parse.hpp"

namespace driftmax::cli {

std::string version_string() { return std::string("driftmax ") + DRIFTMAX_VERSION; }

void apply_settings(ExperimentSpec& spec, const std::map<std::string, std::string>& settings) {
  for (const auto& [key, value] : settings) {
    if (key == "name") spec.name = value;
    else if (key == "dist") spec.dist = value;
    else if (key == "n") spec.N = parse_count(value, key);
    else if (key == "x") spec.x = parse_real(value, key);
    else if (key == "reps") spec.reps = parse_count(value, key);
    else if (key == "seed") spec.seed = parse_count(value, key);
    else if (key == "chunk_size") spec.chunk_size = parse_count(value, key);
    else if (key == "w") spec.w = parse_real(value, key);
    else if (key == "estimator") spec.estimator = value;
    else if (key == "method") spec.method = value;
    else if (key == "cutoff") spec.cutoff = parse_real(value, key);
    else if (key == "y") spec.y = parse_real(value, key);
    else if (key == "k") spec.k = parse_real(value, key);
    else if (key == "horizon") spec.horizon = parse_real(value, key);
    else if (key == "step_cap") spec.step_cap = static_cast<std::int64_t>(parse_count(value, key));
    else throw ConfigError("unknown setting '" + key + "'");
  }
}

void validate_spec(const ExperimentSpec& spec) {
  if (spec.dist.empty()) throw ConfigError("missing dist");
  try {
    (void)walks::parse_distribution(spec.dist);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (spec.reps < 1) throw ConfigError("reps must be at least 1");
  if (spec.chunk_size < 1) throw ConfigError("chunk_size must be at least 1");
  if (spec.method != "auto" && spec.method != "stepwise" && spec.method != "bridge")
    throw ConfigError("method must be auto, stepwise or bridge");
  const auto& e = spec.estimator;
  const bool needs_n = e == "max_le" || e == "truncation" || e == "trial" || e == "max_iid";
  if (needs_n && spec.N < 1) throw ConfigError("missing N for estimator " + e);
  if (e == "max_le" || e == "truncation" || e == "trial") {
    if (std::isnan(spec.x)) throw ConfigError("x is NaN");
  } else if (e == "hitting_tail") {
    if (!spec.y || !spec.k) throw ConfigError("hitting_tail needs y and k");
  } else if (e == "exit_up") {
    if (!spec.y) throw ConfigError("exit_up needs y");
  } else if (e != "ladder_infinite" && e != "max_iid") {
    throw ConfigError("unknown estimator '" + e + "'");
  }
  if (e == "truncation" && !spec.w) throw ConfigError("truncation needs w");
}

namespace {

montecarlo::MaxMethod to_method(const std::string& name) {
  if (name == "stepwise") return montecarlo::MaxMethod::stepwise;
  if (name == "bridge") return montecarlo::MaxMethod::bridge;
  return montecarlo::MaxMethod::automatic;
}

montecarlo::Estimate run_estimator(const ExperimentSpec& spec, const walks::StepDistribution& dist,
                                   unsigned threads) {
  using namespace montecarlo;
  const RunOptions options{spec.chunk_size, threads};
  const auto& e = spec.estimator;
  if (e == "max_le" || e == "truncation" || e == "trial") {
    ExperimentConfig config(dist);
    config.N = spec.N;
    config.x = spec.x;
    config.reps = spec.reps;
    config.seed = spec.seed;
    config.chunk_size = spec.chunk_size;
    config.w = spec.w;
    config.method = to_method(spec.method);
    config.cutoff_epsilon = spec.cutoff;
    config.threads = threads;
    if (e == "max_le") return estimate_max_le(config);
    if (e == "truncation") return estimate_truncation_event(config);
    return estimate_trial_decomposition(config).never_reached;
  }
  if (e == "hitting_tail") {
    const double steps = std::ceil(*spec.k * *spec.y * *spec.y);
    if (!(steps < 9.0e18)) throw DomainError("hitting_tail: k y^2 is too large");
    return estimate_hitting_tail(dist, *spec.y, *spec.k, static_cast<std::int64_t>(steps), spec.reps, spec.seed,
                                 options);
  }
  if (e == "exit_up") {
    return estimate_exit_up(dist, *spec.y, spec.horizon.value_or(std::numeric_limits<double>::infinity()), spec.reps,
                            spec.seed, options, spec.w);
  }
  if (e == "ladder_infinite")
    return estimate_ladder_intervals(dist, 1, spec.reps, spec.seed, options, spec.step_cap, spec.cutoff)
        .infinite_mass();
  return estimate_max_of_iid(dist, static_cast<std::int64_t>(spec.N), spec.reps, spec.seed, options);
}

}  // namespace

ExperimentRow run_experiment(const ExperimentSpec& spec, unsigned threads) {
  validate_spec(spec);
  const auto dist = walks::parse_distribution(spec.dist);
  ExperimentRow row;
  row.spec = spec;
  row.mu = dist.mean();
  row.estimate.reps = spec.reps;
  row.estimate.seed = spec.seed;
  row.estimate.chunk_size = spec.chunk_size;
  const auto start = std::chrono::steady_clock::now();
  try {
    row.estimate = run_estimator(spec, dist, threads);
  } catch (const Error& err) {
    row.status = std::string("error: ") + err.what();
  }
  row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  try {
    row.oracle = experiment_oracle(spec);
  } catch (const Error&) {
    row.oracle.reset();
  }
  return row;
}

std::optional<double> experiment_oracle(const ExperimentSpec& spec) {
  const auto dist = walks::parse_distribution(spec.dist);
  const auto& kind = dist.kind();
  const auto& e = spec.estimator;
  if (e == "max_le" && !spec.w) {
    if (const auto* g = std::get_if<walks::GaussianShift>(&kind))
      return oracles::bm_max_cdf(g->mu / g->sigma, static_cast<double>(spec.N), spec.x / g->sigma);
    if (const auto* d = std::get_if<walks::ExpDifference>(&kind); d && d->alpha > d->beta && spec.x >= 0.0)
      return oracles::exp_sup_cdf(d->alpha, d->beta, spec.x);
    if (const auto* r = std::get_if<walks::Rademacher>(&kind); r && r->p < 0.5 && spec.x >= 0.0)
      return 1.0 - std::pow(r->p / (1.0 - r->p), std::floor(spec.x) + 1.0);
  }
  if (e == "exit_up" && spec.y && !spec.w && !spec.horizon) {
    const auto* r = std::get_if<walks::Rademacher>(&kind);
    const double y = *spec.y;
    if (r && y == std::floor(y) && y < 1e9) return oracles::gamblers_ruin_up(r->p, static_cast<std::int64_t>(y));
  }
  if (e == "ladder_infinite") {
    if (const auto* d = std::get_if<walks::ExpDifference>(&kind); d && d->alpha > d->beta)
      return 1.0 - d->beta / d->alpha;
  }
  return std::nullopt;
}

void write_csv_header(std::ostream& out, const CsvOptions& options) {
  out << "N,x,mu,estimator,p_hat,se,ci_lo,ci_hi,reps,seed,elapsed_ms,chunk_size,n_chunks,dist,version,status";
  if (options.oracle) out << ",oracle";
  if (options.ratio) out << ",ratio";
  out << '\n';
}

namespace {

std::string fixed3(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
  return ec == std::errc() ? std::string(buf, ptr) : std::string();
}

std::string csv_text(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + '"';
}

}  // namespace

void write_csv_row(std::ostream& out, const ExperimentRow& row, const CsvOptions& options) {
  using walks::format_real;
  const auto& s = row.spec;
  const auto& e = row.estimate;
  const bool ok = row.status == "ok";
  out << s.N << ',' << format_real(s.x) << ',' << format_real(row.mu) << ',' << s.estimator << ',';
  if (ok)
    out << format_real(e.p_hat) << ',' << format_real(e.std_err) << ',' << format_real(e.ci_lo) << ','
        << format_real(e.ci_hi);
  else
    out << ",,,";
  out << ',' << s.reps << ',' << s.seed << ',' << (options.timing ? fixed3(row.elapsed_ms) : std::string()) << ','
      << s.chunk_size << ',' << (ok ? std::to_string(e.n_chunks) : std::string()) << ','
      << csv_text(walks::parse_distribution(s.dist).spec()) << ',' << csv_text(version_string()) << ','
      << csv_text(row.status);
  if (options.oracle) out << ',' << (row.oracle ? format_real(*row.oracle) : std::string());
  if (options.ratio) {
    const double n = static_cast<double>(s.N);
    const double scale = s.x * std::log(n) / std::sqrt(n);
    out << ',' << (ok && scale > 0.0 ? format_real(e.p_hat / scale) : std::string());
  }
  out << '\n';
}

walks::StepDistribution with_mean(const walks::StepDistribution& dist, double mu) {
  if (!std::isfinite(mu)) throw DomainError("with_mean: mu must be finite");
  return std::visit(
      [mu](const auto& law) -> walks::StepDistribution {
        using Law = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<Law, walks::GaussianShift>) {
          return walks::GaussianShift(mu, law.sigma2);
        } else if constexpr (std::is_same_v<Law, walks::ExpDifference>) {
          const double inv_alpha = mu + 1.0 / law.beta;
          if (!(inv_alpha > 0.0)) throw DomainError("with_mean: mean not reachable for expdiff with this beta");
          return walks::ExpDifference(1.0 / inv_alpha, law.beta);
        } else if constexpr (std::is_same_v<Law, walks::Rademacher>) {
          if (!(std::abs(mu) < 1.0)) throw DomainError("with_mean: rademacher mean must lie in (-1, 1)");
          return walks::Rademacher(0.5 * (1.0 + mu));
        } else {
          const double target = mu + numerics::digamma(law.beta);
          const double alpha =
              numerics::find_root([target](double a) { return numerics::digamma(a) - target; }, 1e-8, 1e8, 1e-15);
          return walks::LogGammaDifference(alpha, law.beta);
        }
      },
      dist.kind());
}

}  // namespace driftmax::cli
