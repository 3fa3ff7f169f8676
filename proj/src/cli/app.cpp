#include "driftmax/cli/app.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "driftmax/cli/checks.hpp"
#include "driftmax/cli/config.hpp"
#include "driftmax/cli/experiment.hpp"
#include "driftmax/constants.hpp"
#include "driftmax/oracles.hpp"
#include "parse.hpp"
#include "svg_plot.hpp"

namespace driftmax::cli {

namespace {

using nlohmann::json;
using walks::format_real;

// Key/value output shared by `constants` and `oracle`: aligned text or one JSON line.
class Report {
 public:
  void add(const std::string& key, double value) {
    rows_.emplace_back(key, format_real(value));
    json_[key] = value;
  }
  void add(const std::string& key, const std::string& value) {
    rows_.emplace_back(key, value);
    json_[key] = value;
  }
  void add(const std::string& key, bool value) {
    rows_.emplace_back(key, value ? "true" : "false");
    json_[key] = value;
  }
  void add(const std::string& key, std::uint64_t value) {
    rows_.emplace_back(key, std::to_string(value));
    json_[key] = value;
  }
  void add(const std::string& key, const constants::Magnitude& m) {
    rows_.emplace_back(key, m.to_string());
    json_[key] = {{"text", m.to_string()}, {"log", m.log()}, {"log_log", m.log_log()}};
  }
  void add_lines(const std::string& key, std::vector<std::string> lines, json value) {
    for (auto& line : lines) rows_.emplace_back("", std::move(line));
    json_[key] = std::move(value);
  }
  void print(std::ostream& out, bool as_json) const {
    if (as_json) {
      out << json_.dump() << '\n';
      return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) {
      if (k.empty())
        out << "  " << v << '\n';
      else
        out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
  json json_ = json::object();
};

struct ConstantsArgs {
  std::string dist;
  double cm = 0, thetabar = 0, sigmastar2 = 0, cmu = 0;
  std::uint64_t n = 0;
  std::optional<double> x;
  bool json = false;
};

int cmd_constants(const ConstantsArgs& a, std::ostream& out) {
  const auto dist = walks::parse_distribution(a.dist);
  walks::AssumptionParams params{a.cm, a.thetabar, a.sigmastar2, a.cmu, a.n};
  params.validate();
  const double mu = dist.mean();
  const auto tc = a.x ? constants::theorem_constants(params, mu, *a.x) : constants::theorem_constants(params);
  Report r;
  r.add("dist", dist.spec());
  r.add("mu", mu);
  r.add("N", a.n);
  r.add("c_tau", tc.c_tau);
  r.add("y0", tc.y0);
  r.add("c_m", tc.c_m);
  r.add("C2", tc.C2);
  r.add("C3", tc.C3);
  r.add("C4", tc.C4);
  r.add("C0", tc.C0);
  r.add("C0_split", tc.C0_split);
  r.add("C0_relative_gap", tc.C0_relative_gap);
  r.add("C10", tc.C10);
  r.add("C11", tc.C11);
  r.add("C_A", tc.C_A);
  r.add("C12", tc.C12);
  r.add("C", tc.C);
  r.add("C_direct", tc.C_direct);
  r.add("C_relative_gap", tc.C_relative_gap);
  r.add("overflow", tc.overflow);
  r.add("H_N", constants::horizon(mu, a.n));
  if (tc.ladder) {
    r.add("x", *a.x);
    r.add("K", static_cast<double>(tc.ladder->K));
    std::string ls;
    for (const auto l : tc.ladder->L) ls += (ls.empty() ? "" : ",") + std::to_string(l);
    r.add("L", ls.empty() ? std::string("empty (K < 0)") : ls);
  }
  try {
    const double theta0 = constants::tilt_point(dist, params);
    r.add("theta0", theta0);
  } catch (const PreconditionError& e) {
    r.add("theta0", std::string("unavailable: ") + e.what());
  }

  const auto report = walks::verify_assumptions(dist, params);
  r.add("assumptions_pass", report.pass);
  std::vector<std::string> lines;
  json conditions = json::array();
  for (const auto& c : report.conditions) {
    lines.push_back(std::string(c.pass ? "pass " : "FAIL ") + c.id + ": " + c.requirement + " (measured " +
                    format_real(c.measured) + ", bound " + format_real(c.bound) + ")");
    conditions.push_back({{"id", c.id}, {"requirement", c.requirement}, {"measured", c.measured}, {"bound", c.bound},
                          {"pass", c.pass}});
  }
  r.add_lines("assumptions", std::move(lines), std::move(conditions));

  const auto ledger = constants::n0_ledger(dist, params);
  r.add("ledger_pass", ledger.pass);
  r.add("minimal_N", ledger.minimal_N ? std::to_string(*ledger.minimal_N) : std::string("none"));
  lines.clear();
  json entries = json::array();
  for (const auto& e : ledger.entries) {
    lines.push_back(std::string(e.pass ? "pass " : "FAIL ") + "(" + e.id + ") " + e.description + ": " + e.instantiated);
    entries.push_back({{"id", e.id}, {"description", e.description}, {"instantiated", e.instantiated}, {"lhs", e.lhs},
                       {"rhs", e.rhs}, {"pass", e.pass}});
  }
  r.add_lines("ledger", std::move(lines), std::move(entries));
  r.print(out, a.json);
  return kExitOk;
}

// Experiment settings given on the command line, as config-file keys.
struct SettingFlags {
  std::map<std::string, std::string> values;

  void bind(CLI::App* cmd, const std::string& flag, const std::string& key, const std::string& help) {
    cmd->add_option_function<std::string>(flag, [this, key](const std::string& v) { values[key] = v; }, help);
  }
};

struct SimulateArgs {
  std::string config;
  std::string output;
  unsigned threads = 0;
  bool oracle = false;
  bool timing = false;
};

std::vector<ExperimentSpec> build_specs(const SimulateArgs& a, const SettingFlags& flags) {
  std::vector<std::pair<std::string, std::map<std::string, std::string>>> experiments{{"", {}}};
  if (!a.config.empty()) experiments = load_config(a.config).experiments();
  std::vector<ExperimentSpec> specs;
  for (auto& [name, settings] : experiments) {
    for (const auto& [k, v] : flags.values) settings[k] = v;
    ExperimentSpec spec;
    spec.name = name;
    apply_settings(spec, settings);
    validate_spec(spec);
    specs.push_back(std::move(spec));
  }
  return specs;
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path, std::ios::binary);
  if (!file) throw ConfigError("cannot write " + path);
  return file;
}

int cmd_simulate(const SimulateArgs& a, const SettingFlags& flags, std::ostream& out) {
  const auto specs = build_specs(a, flags);
  std::ofstream file;
  std::ostream& sink = open_output(a.output, file, out);
  const CsvOptions csv{a.timing, a.oracle, false};
  write_csv_header(sink, csv);
  for (const auto& spec : specs) write_csv_row(sink, run_experiment(spec, a.threads), csv);
  sink.flush();
  return kExitOk;
}

struct SweepArgs {
  std::string dist;
  std::string n_list;
  std::uint64_t n_min = 4096;
  std::uint64_t n_max = 1048576;
  std::uint64_t n_factor = 2;
  std::string drift = "inv-sqrt";
  double mu = 0.0;
  double drift_c = 1.0;
  std::string x_rule = "log-squared";
  double x = 1.0;
  std::string reps = "100000";
  std::string seed = "1";
  std::string chunk_size = "4096";
  std::string method = "auto";
  std::string plot;
  std::string output;
  unsigned threads = 0;
  bool oracle = false;
  bool timing = false;
};

std::vector<std::uint64_t> sweep_values(const SweepArgs& a) {
  std::vector<std::uint64_t> out;
  if (!a.n_list.empty()) {
    std::stringstream ss(a.n_list);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_count(item, "n-list entry"));
    return out;
  }
  if (a.n_factor < 2) throw ConfigError("n-factor must be at least 2");
  for (std::uint64_t n = a.n_min; n <= a.n_max; n *= a.n_factor) {
    out.push_back(n);
    if (n > a.n_max / a.n_factor) break;
  }
  return out;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const auto base = walks::parse_distribution(a.dist);
  std::vector<ExperimentSpec> specs;
  for (std::uint64_t N : sweep_values(a)) {
    if (N < 2) throw ConfigError("sweep: every N must be at least 2");
    const double logn = std::log(static_cast<double>(N));
    double mu = a.mu;
    if (a.drift == "inv-sqrt")
      mu = -1.0 / std::sqrt(static_cast<double>(N));
    else if (a.drift == "log-cubed")
      mu = -a.drift_c / (logn * logn * logn);
    else if (a.drift != "fixed")
      throw ConfigError("drift must be fixed, inv-sqrt or log-cubed");
    double x = a.x;
    if (a.x_rule == "log-squared")
      x = logn * logn;
    else if (a.x_rule != "fixed")
      throw ConfigError("x-rule must be fixed or log-squared");
    if (!(x > 0.0)) throw ConfigError("sweep: x must be positive");
    if (!(mu <= 0.0)) throw ConfigError("sweep: drift must be nonpositive");
    ExperimentSpec spec;
    spec.dist = with_mean(base, mu).spec();
    spec.N = N;
    spec.x = x;
    apply_settings(spec, {{"reps", a.reps}, {"seed", a.seed}, {"chunk_size", a.chunk_size}, {"method", a.method}});
    validate_spec(spec);
    specs.push_back(std::move(spec));
  }
  std::ofstream file;
  std::ostream& sink = open_output(a.output, file, out);
  const CsvOptions csv{a.timing, a.oracle, true};
  write_csv_header(sink, csv);
  std::vector<std::pair<double, double>> points;
  for (const auto& spec : specs) {
    const auto row = run_experiment(spec, a.threads);
    write_csv_row(sink, row, csv);
    const double n = static_cast<double>(spec.N);
    if (row.status == "ok") points.emplace_back(n, row.estimate.p_hat / (spec.x * std::log(n) / std::sqrt(n)));
  }
  sink.flush();
  if (!a.plot.empty()) {
    std::ofstream svg(a.plot, std::ios::binary);
    if (!svg) throw ConfigError("cannot write " + a.plot);
    write_ratio_plot(svg, points, "p_hat / (x log N N^-1/2) vs N, " + a.dist);
  }
  return kExitOk;
}

struct CheckArgs {
  std::string only;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool list = false;
  bool verbose = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  if (a.list) {
    for (const auto& c : check_catalog()) out << c.number << ' ' << c.id << "  " << c.title << '\n';
    return kExitOk;
  }
  std::vector<std::string> ids;
  if (a.only.empty()) {
    for (const auto& c : check_catalog()) ids.push_back(c.id);
  } else {
    std::stringstream ss(a.only);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const bool known = std::any_of(check_catalog().begin(), check_catalog().end(),
                                     [&](const CheckInfo& c) { return c.id == item || std::to_string(c.number) == item; });
      if (!known) throw ConfigError("unknown check '" + item + "' (see check --list)");
      for (const auto& c : check_catalog())
        if (c.id == item || std::to_string(c.number) == item) ids.push_back(c.id);
    }
  }
  int failed = 0;
  for (const auto& id : ids) {
    const auto r = run_check(id, a.seed, a.threads);
    out << format_check(r, a.verbose) << std::flush;
    if (!r.pass) ++failed;
  }
  out << (failed == 0 ? "all " + std::to_string(ids.size()) + " checks passed"
                      : std::to_string(failed) + " of " + std::to_string(ids.size()) + " checks failed")
      << '\n';
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

struct OracleArgs {
  bool json = false;
  double mu = 0, t = 1, b = 0, alpha = 0, beta = 0, x = 0, p = 0.5, sigma = 1, sigma2 = 1, rho = 0, c1 = 0, C1 = 0,
         C = 0, k = 0, sigmastar2 = 1;
  std::uint64_t n = 0;
  std::int64_t y = 0;
  std::optional<std::int64_t> down;
};

void add_oracles(CLI::App* oracle, OracleArgs& o, std::string& which) {
  oracle->add_flag("--json", o.json, "Emit one JSON object");
  oracle->require_subcommand(1);
  auto sub = [&](const std::string& name, const std::string& help) {
    auto* s = oracle->add_subcommand(name, help);
    s->callback([&which, name] { which = name; });
    return s;
  };
  auto* bm = sub("brownian", "P(max_{s<=t} B_s + mu s < b)");
  bm->add_option("--mu", o.mu)->required();
  bm->add_option("--t", o.t);
  bm->add_option("--b", o.b)->required();
  auto* es = sub("expsup", "P(sup S <= x) for expdiff(alpha,beta)");
  es->add_option("--alpha", o.alpha)->required();
  es->add_option("--beta", o.beta)->required();
  es->add_option("--x", o.x)->required();
  auto* ld = sub("ladder", "Ladder-interval pmf for expdiff(alpha,beta)");
  ld->add_option("--alpha", o.alpha)->required();
  ld->add_option("--beta", o.beta)->required();
  ld->add_option("--n", o.n);
  auto* gr = sub("gambler", "P(+1/-1 walk reaches +y before -down)");
  gr->add_option("--p", o.p)->required();
  gr->add_option("--y", o.y)->required();
  gr->add_option("--down", o.down);
  auto* km = sub("kmt", "Coupling-based bound on P(max S_m > x)");
  km->add_option("--x", o.x)->required();
  km->add_option("--n", o.n)->required();
  km->add_option("--mu", o.mu)->required();
  km->add_option("--sigma", o.sigma);
  km->add_option("--c1", o.c1)->required();
  auto* th = sub("thm", "C x |mu| log N");
  th->add_option("--c", o.C)->required();
  th->add_option("--n", o.n)->required();
  th->add_option("--x", o.x)->required();
  th->add_option("--mu", o.mu)->required();
  auto* be = sub("berry-esseen", "3 rho / (sigma^3 sqrt n)");
  be->add_option("--sigma2", o.sigma2)->required();
  be->add_option("--rho", o.rho)->required();
  be->add_option("--n", o.n)->required();
  auto* iid = sub("iid", "Ceiling on E max{0, Y_1..Y_n}");
  iid->add_option("--c1", o.c1)->required();
  iid->add_option("--C1", o.C1)->required();
  iid->add_option("--n", o.n)->required();
  auto* ht = sub("hitting", "2 exp(-c_tau k)");
  ht->add_option("--sigmastar2", o.sigmastar2);
  ht->add_option("--k", o.k)->required();
  auto* gl = sub("gaussian-lower", "Gaussian lower-bound chain");
  gl->add_option("--x", o.x)->required();
  gl->add_option("--mu", o.mu)->required();
  gl->add_option("--n", o.n)->required();
}

int cmd_oracle(const std::string& which, const OracleArgs& o, std::ostream& out) {
  Report r;
  r.add("oracle", which);
  if (which == "brownian") {
    r.add("reflection", oracles::bm_max_cdf(o.mu, o.t, o.b));
    if (o.mu < 0.0) {
      // Brownian scaling maps horizon t to 1.
      const double scale = std::sqrt(o.t);
      const double integral = oracles::bm_max_cdf_integral(o.mu * scale, o.b / scale);
      r.add("integral", integral);
      r.add("abs_difference", std::abs(integral - oracles::bm_max_cdf(o.mu, o.t, o.b)));
    }
  } else if (which == "expsup") {
    r.add("cdf", oracles::exp_sup_cdf(o.alpha, o.beta, o.x));
  } else if (which == "ladder") {
    if (o.n > 0) r.add("pmf", oracles::ladder_interval_pmf(o.alpha, o.beta, o.n));
    r.add("infinite_mass", oracles::ladder_infinite_mass(o.alpha, o.beta));
    const auto norm = oracles::ladder_normalization(o.alpha, o.beta);
    r.add("finite_mass", norm.finite_mass);
    r.add("normalization", norm.total);
    r.add("terms", norm.n_star);
    if (o.alpha > o.beta) r.add("epoch_mean_time", oracles::ladder_epoch_mean_time(o.alpha, o.beta));
  } else if (which == "gambler") {
    r.add("up", o.down ? oracles::gamblers_ruin_up(o.p, o.y, *o.down) : oracles::gamblers_ruin_up(o.p, o.y));
  } else if (which == "kmt" || which == "thm") {
    const auto v = which == "kmt" ? oracles::kmt_bound(o.x, o.n, o.mu, o.sigma, o.c1)
                                  : oracles::thm_bound(o.C, o.n, o.x, o.mu);
    r.add("value", v.value);
    r.add("log_value", v.log_value);
    r.add("vacuous", v.vacuous);
    for (const auto& [name, value] : v.components) r.add(name, value);
  } else if (which == "berry-esseen") {
    r.add("gap", oracles::berry_esseen_gap(o.sigma2, o.rho, o.n));
  } else if (which == "iid") {
    r.add("ceiling", oracles::max_of_iid_bound(o.c1, o.C1, o.n));
  } else if (which == "hitting") {
    const double ct = constants::c_tau(o.sigmastar2);
    r.add("c_tau", ct);
    r.add("bound", oracles::hitting_tail_bound(ct, o.k));
  } else if (which == "gaussian-lower") {
    const auto g = oracles::gaussian_lower_bound(o.x, o.mu, o.n);
    r.add("lower_bound", g.lower_bound);
    r.add("exact", g.exact);
    r.add("chain_holds", g.chain_holds);
  }
  r.print(out, o.json);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random walks with small negative drift: constants, Monte Carlo, oracles and checks.", "driftmax"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version_string());

  ConstantsArgs ca;
  auto* constants_cmd = app.add_subcommand("constants", "Print the theorem constants and the large-N ledger");
  constants_cmd->add_option("--dist", ca.dist, "Step law, e.g. gaussian(0,1)")->required();
  constants_cmd->add_option("--cm", ca.cm, "C_M")->required();
  constants_cmd->add_option("--thetabar", ca.thetabar, "theta_bar")->required();
  constants_cmd->add_option("--sigmastar2", ca.sigmastar2, "sigma_*^2")->required();
  constants_cmd->add_option("--cmu", ca.cmu, "c_mu")->required();
  constants_cmd->add_option("--n", ca.n, "Horizon N")->required();
  constants_cmd->add_option("--x", ca.x, "Level x (adds the trial ladder)");
  constants_cmd->add_flag("--json", ca.json, "Emit one JSON object");

  SimulateArgs sa;
  SettingFlags sflags;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run Monte Carlo experiments and print CSV");
  simulate_cmd->add_option("--config", sa.config, "key=value file with optional [sections]");
  sflags.bind(simulate_cmd, "--dist", "dist", "Step law");
  sflags.bind(simulate_cmd, "--n", "n", "Horizon N");
  sflags.bind(simulate_cmd, "--x", "x", "Level x");
  sflags.bind(simulate_cmd, "--reps", "reps", "Paths (default 100000)");
  sflags.bind(simulate_cmd, "--seed", "seed", "Seed (default 1)");
  sflags.bind(simulate_cmd, "--chunk-size", "chunk_size", "Paths per chunk (default 4096)");
  sflags.bind(simulate_cmd, "--w", "w", "Truncation level");
  sflags.bind(simulate_cmd, "--estimator", "estimator",
              "max_le, truncation, hitting_tail, exit_up, trial, ladder_infinite or max_iid");
  sflags.bind(simulate_cmd, "--method", "method", "auto, stepwise or bridge");
  sflags.bind(simulate_cmd, "--cutoff", "cutoff", "Lundberg cutoff epsilon (0 disables)");
  sflags.bind(simulate_cmd, "--y", "y", "Cylinder half-width");
  sflags.bind(simulate_cmd, "--k", "k", "Hitting-time multiple of y^2");
  sflags.bind(simulate_cmd, "--horizon", "horizon", "Exit horizon");
  sflags.bind(simulate_cmd, "--step-cap", "step_cap", "Ladder step cap");
  simulate_cmd->add_option("--threads", sa.threads, "Worker threads (0 = DRIFTMAX_THREADS or all cores)");
  simulate_cmd->add_option("--output", sa.output, "Write CSV here instead of stdout");
  simulate_cmd->add_flag("--oracle", sa.oracle, "Append a closed-form reference column");
  simulate_cmd->add_flag("--timing", sa.timing, "Fill elapsed_ms (makes output run-dependent)");

  SweepArgs wa;
  auto* sweep_cmd = app.add_subcommand("sweep", "P(max <= x) over a range of N, with the ratio column");
  sweep_cmd->add_option("--dist", wa.dist, "Step law template; its mean is set by the drift rule")->required();
  sweep_cmd->add_option("--n-list", wa.n_list, "Comma-separated N values");
  sweep_cmd->add_option("--n-min", wa.n_min, "Smallest N of the geometric range (default 4096)");
  sweep_cmd->add_option("--n-max", wa.n_max, "Largest N of the geometric range (default 1048576)");
  sweep_cmd->add_option("--n-factor", wa.n_factor, "Ratio of the geometric range (default 2)");
  sweep_cmd->add_option("--drift", wa.drift, "fixed, inv-sqrt (mu = -N^-1/2) or log-cubed (mu = -c (log N)^-3)");
  sweep_cmd->add_option("--mu", wa.mu, "Drift for --drift fixed");
  sweep_cmd->add_option("--drift-c", wa.drift_c, "c for --drift log-cubed");
  sweep_cmd->add_option("--x-rule", wa.x_rule, "fixed or log-squared (x = (log N)^2)");
  sweep_cmd->add_option("--x", wa.x, "Level for --x-rule fixed");
  sweep_cmd->add_option("--reps", wa.reps, "Paths per row");
  sweep_cmd->add_option("--seed", wa.seed, "Seed");
  sweep_cmd->add_option("--chunk-size", wa.chunk_size, "Paths per chunk");
  sweep_cmd->add_option("--method", wa.method, "auto, stepwise or bridge");
  sweep_cmd->add_option("--threads", wa.threads, "Worker threads");
  sweep_cmd->add_option("--plot", wa.plot, "Also write an SVG chart of ratio vs N");
  sweep_cmd->add_option("--output", wa.output, "Write CSV here instead of stdout");
  sweep_cmd->add_flag("--oracle", wa.oracle, "Append a closed-form reference column");
  sweep_cmd->add_flag("--timing", wa.timing, "Fill elapsed_ms");

  OracleArgs oa;
  std::string which;
  auto* oracle_cmd = app.add_subcommand("oracle", "Evaluate closed forms and bounds");
  add_oracles(oracle_cmd, oa, which);

  CheckArgs ka;
  auto* check_cmd = app.add_subcommand("check", "Run the acceptance checks");
  check_cmd->add_option("--only", ka.only, "Comma-separated check ids or numbers");
  check_cmd->add_option("--seed", ka.seed, "Seed (default 1)");
  check_cmd->add_option("--threads", ka.threads, "Worker threads");
  check_cmd->add_flag("--list", ka.list, "List the checks and exit");
  check_cmd->add_flag("--verbose", ka.verbose, "Also print informational lines");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << version_string() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failing = &app;
    for (auto* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return kExitUsage;
  }

  try {
    if (constants_cmd->parsed()) return cmd_constants(ca, out);
    if (simulate_cmd->parsed()) return cmd_simulate(sa, sflags, out);
    if (sweep_cmd->parsed()) return cmd_sweep(wa, out);
    if (oracle_cmd->parsed()) return cmd_oracle(which, oa, out);
    if (check_cmd->parsed()) return cmd_check(ka, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace driftmax::cli
