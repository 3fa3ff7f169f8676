#include "driftmax/cli/checks.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "driftmax/cli/app.hpp"
#include "driftmax/cli/experiment.hpp"
#include "driftmax/constants.hpp"
#include "driftmax/montecarlo.hpp"
#include "driftmax/numerics.hpp"
#include "driftmax/oracles.hpp"

namespace driftmax::cli {

namespace {

using montecarlo::Estimate;

std::string num(double v, int precision = 8) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("?");
}

std::string verdict(bool ok) { return ok ? "ok" : "VIOLATED"; }

struct Context {
  std::uint64_t seed;
  unsigned threads;
  std::vector<std::string> lines;
  bool pass = true;

  void record(bool ok, const std::string& line) {
    pass = pass && ok;
    lines.push_back("[" + verdict(ok) + "] " + line);
  }
  void note(const std::string& line) { lines.push_back("[info] " + line); }
};

montecarlo::ExperimentConfig max_config(walks::StepDistribution dist, std::uint64_t N, double x, std::uint64_t reps,
                                        const Context& ctx) {
  montecarlo::ExperimentConfig c(std::move(dist));
  c.N = N;
  c.x = x;
  c.reps = reps;
  c.seed = ctx.seed;
  c.threads = ctx.threads;
  return c;
}

std::string est_text(const Estimate& e) { return num(e.p_hat) + " (SE " + num(e.std_err, 3) + ")"; }

void check_brownian(Context& ctx) {
  double worst = 0.0;
  double worst_b = 0.0;
  double worst_mu = 0.0;
  for (double b : {0.1, 0.5, 1.0, 2.0, 3.0}) {
    for (double mu : {-2.0, -1.0, -0.5, -0.1, -0.01}) {
      const double d = std::abs(oracles::bm_max_cdf(mu, 1.0, b) - oracles::bm_max_cdf_integral(mu, b));
      if (d >= worst) {
        worst = d;
        worst_b = b;
        worst_mu = mu;
      }
    }
  }
  ctx.record(worst <= 1e-8, "max |reflection - integral| over 25 (b, mu) points = " + num(worst, 3) + " at b=" +
                                num(worst_b) + ", mu=" + num(worst_mu) + "; required <= 1e-8");
}

void check_feller(Context& ctx) {
  for (double x : {0.5, 1.0, 2.0}) {
    const auto e = montecarlo::estimate_max_le(max_config(walks::ExpDifference(1.2, 1.0), 1000000, x, 100000, ctx));
    const double oracle = oracles::exp_sup_cdf(1.2, 1.0, x);
    const double lo = oracle - 4 * e.std_err;
    const double hi = oracle + 0.01 + 4 * e.std_err;
    ctx.record(e.p_hat >= lo && e.p_hat <= hi, "x=" + num(x) + ": p_hat " + est_text(e) + " in [oracle - 4SE, oracle + 0.01 + 4SE] = [" +
                                                   num(lo) + ", " + num(hi) + "], oracle " + num(oracle));
    ctx.note("x=" + num(x) + ": p_hat >= oracle without the 4SE allowance: " + (e.p_hat >= oracle ? "yes" : "no"));
  }
}

void check_ladder(Context& ctx) {
  const auto h = montecarlo::estimate_ladder_intervals(walks::ExpDifference(2.0, 1.0), 5, 1000000, ctx.seed,
                                                       {montecarlo::kDefaultChunkSize, ctx.threads});
  for (std::int64_t n = 1; n <= 5; ++n) {
    const auto f = h.frequency(n);
    const double pmf = oracles::ladder_interval_pmf(2.0, 1.0, static_cast<std::uint64_t>(n));
    ctx.record(std::abs(f.p_hat - pmf) <= 4 * f.std_err,
               "P(T=" + std::to_string(n) + "): " + est_text(f) + " vs pmf " + num(pmf) + ", |diff| " +
                   num(std::abs(f.p_hat - pmf), 3) + " <= 4SE " + num(4 * f.std_err, 3));
  }
  const auto inf = h.infinite_mass();
  ctx.record(std::abs(inf.p_hat - 0.5) <= 4 * inf.std_err + 1e-3,
             "P(T=inf) (cutoff " + std::to_string(h.infinite_by_cutoff) + ", censored " + std::to_string(h.censored) +
                 "): " + est_text(inf) + " vs 1/2, |diff| " + num(std::abs(inf.p_hat - 0.5), 3) +
                 " <= 4SE + 1e-3 = " + num(4 * inf.std_err + 1e-3, 3));
}

void check_gambler(Context& ctx) {
  for (double p : {0.40, 0.45, 0.50}) {
    for (int y : {3, 5, 10}) {
      const auto e = montecarlo::estimate_exit_up(walks::Rademacher(p), y, INFINITY, 100000, ctx.seed,
                                                  {montecarlo::kDefaultChunkSize, ctx.threads});
      const double exact = oracles::gamblers_ruin_up(p, y);
      ctx.record(std::abs(e.p_hat - exact) <= 4 * e.std_err,
                 "p=" + num(p) + ", y=" + std::to_string(y) + ": " + est_text(e) + " vs " + num(exact) + ", |diff| " +
                     num(std::abs(e.p_hat - exact), 3) + " <= 4SE " + num(4 * e.std_err, 3));
    }
  }
}

void check_hitting(Context& ctx) {
  const double y = 140.0;
  const double y0 = constants::y0(1.0, 1.0);
  ctx.record(y >= y0, "y = 140 >= y0(C_M=1, sigma*^2=1) = " + num(y0));
  const double ct = constants::c_tau(1.0);
  const std::vector<double> ks{1, 2, 3, 4, 5, 6, 7, 8};
  const auto max_steps = static_cast<std::int64_t>(8 * y * y);
  for (const auto& [label, dist] :
       std::vector<std::pair<std::string, walks::StepDistribution>>{{"gaussian(-0.001,1)", walks::GaussianShift(-0.001, 1.0)},
                                                                    {"expdiff(1.01,1)", walks::ExpDifference(1.01, 1.0)}}) {
    const auto profile = montecarlo::estimate_hitting_tail_profile(dist, y, ks, max_steps, 10000, ctx.seed,
                                                                   {montecarlo::kDefaultChunkSize, ctx.threads});
    for (std::size_t j = 0; j < ks.size(); ++j) {
      const double bound = oracles::hitting_tail_bound(ct, ks[j]);
      ctx.record(profile[j].p_hat <= bound + 4 * profile[j].std_err,
                 label + ", k=" + num(ks[j]) + ": P(tau > k y^2) " + est_text(profile[j]) + " <= 2exp(-c_tau k) + 4SE = " +
                     num(bound + 4 * profile[j].std_err));
    }
  }
}

void check_iid(Context& ctx) {
  const montecarlo::Sampler exp1 = [](numerics::RngStream& rng) { return numerics::standard_exponential(rng); };
  for (int n : {10, 100, 1000}) {
    const auto e = montecarlo::estimate_max_of_iid(exp1, n, 100000, ctx.seed, {montecarlo::kDefaultChunkSize, ctx.threads});
    double H = 0.0;
    for (int i = n; i >= 1; --i) H += 1.0 / i;
    const double bound = oracles::max_of_iid_bound(0.5, 2.0, static_cast<std::uint64_t>(n));
    ctx.record(e.p_hat + 4 * e.std_err <= bound,
               "n=" + std::to_string(n) + ": E max + 4SE = " + num(e.p_hat + 4 * e.std_err) + " <= 2 log(2n+1) = " + num(bound));
    ctx.record(std::abs(e.p_hat - H) <= 4 * e.std_err, "n=" + std::to_string(n) + ": E max " + est_text(e) + " vs H_n " +
                                                          num(H) + ", |diff| " + num(std::abs(e.p_hat - H), 3) +
                                                          " <= 4SE " + num(4 * e.std_err, 3));
  }
}

void check_tilt(Context& ctx) {
  const walks::AssumptionParams params{2.0, 1.0, 1.0, 1.0, 1 << 20};
  for (double m : {0.01, 0.05, 0.1}) {
    const walks::StepDistribution g = walks::GaussianShift(-m, 1.0);
    const double theta = constants::tilt_point(g, params);
    ctx.record(std::abs(theta - m) <= 1e-10, "gaussian(-" + num(m) + ",1): theta0 = " + num(theta, 17) +
                                                 ", |theta0 - m| = " + num(std::abs(theta - m), 3) + " <= 1e-10");
  }
  const walks::StepDistribution d = walks::ExpDifference(1.05, 1.0);
  const double theta = constants::tilt_point(d, params);
  const double slope = d.mgf_deriv(theta, 1);
  const double hi = 2.0 * std::abs(d.mean()) / params.sigma_star2;
  ctx.record(std::abs(slope) <= 1e-10, "expdiff(1.05,1): |M'(theta0)| = " + num(std::abs(slope), 3) + " <= 1e-10");
  ctx.record(theta >= 0.0 && theta <= hi,
             "expdiff(1.05,1): theta0 = " + num(theta, 17) + " in [0, 2|mu|/sigma*^2] = [0, " + num(hi) + "]");
  const auto q = constants::tilted_moments(d, theta, params);
  ctx.record(std::abs(q.q_mean) <= 1e-9, "expdiff(1.05,1): tilted mean = " + num(q.q_mean, 3) + ", |.| <= 1e-9");
}

void check_constants(Context& ctx) {
  numerics::RngStream rng(ctx.seed, 0);
  double worst = 0.0;
  double worst_C0 = 0.0;
  int evaluated = 0;
  for (int i = 0; i < 100; ++i) {
    auto draw = [&] { return 0.1 + 4.9 * rng.next_uniform(); };
    walks::AssumptionParams p;
    p.C_M = draw();
    p.theta_bar = draw();
    p.sigma_star2 = draw();
    p.c_mu = draw();
    p.N = 1 << 20;
    const auto tc = constants::theorem_constants(p);
    worst = std::max(worst, tc.C_relative_gap);
    worst_C0 = std::max(worst_C0, tc.C0_relative_gap);
    ++evaluated;
  }
  ctx.record(evaluated == 100 && worst <= 1e-9, "closed-form C vs C12 + 3 in log space, worst relative gap over " +
                                                    std::to_string(evaluated) + " tuples = " + num(worst, 3) + " <= 1e-9");
  ctx.note("C0 closed form vs C2 + C4, worst relative gap = " + num(worst_C0, 3));
  // Independent route: the mass of N(0,1) on [-2, 2] by quadrature.
  const double inside =
      numerics::integrate([](double s) { return numerics::normal_pdf(s); }, -2.0, 2.0, {1e-15, 1e-15, 2000}).value;
  const double independent = -std::log(0.5 * (1.0 + inside));
  const double ct = constants::c_tau(1.0);
  ctx.record(std::abs(ct - independent) <= 1e-6 && std::abs(ct - 0.0230129) <= 1e-6,
             "c_tau(1) = " + num(ct, 12) + ", quadrature route " + num(independent, 12) + ", |diff| " +
                 num(std::abs(ct - independent), 3) + "; |c_tau - 0.0230129| = " + num(std::abs(ct - 0.0230129), 3) +
                 " <= 1e-6");
}

void check_scaling(Context& ctx) {
  double lo = INFINITY;
  double hi = 0.0;
  for (int p : {12, 14, 16, 18, 20}) {
    const auto N = std::uint64_t{1} << p;
    const double n = static_cast<double>(N);
    const double L = std::log(n);
    const auto e = montecarlo::estimate_max_le(max_config(walks::GaussianShift(-1.0 / std::sqrt(n), 1.0), N, L * L, 100000, ctx));
    const double ratio = e.p_hat / (L * L * L / std::sqrt(n));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    ctx.note("N=2^" + std::to_string(p) + ": p_hat " + est_text(e) + ", ratio " + num(ratio));
  }
  ctx.record(lo > 0.0 && hi / lo <= 10.0, "ratio band max/min = " + num(hi / lo) + " <= 10");
}

void check_loggamma(Context& ctx) {
  const double a = 1.5;
  const double b = 1.5 + 1e-3;
  const walks::LogGammaDifference law(a, b);
  const walks::StepDistribution dist(law);
  const std::uint64_t n = 1000000;
  numerics::RngStream rng(ctx.seed, 0);
  std::vector<double> xs(n);
  double sum = 0.0;
  for (auto& v : xs) {
    v = law.sample(rng);
    sum += v;
  }
  const double mean = sum / static_cast<double>(n);
  double m2 = 0.0;
  double m4 = 0.0;
  for (double v : xs) {
    const double d = (v - mean) * (v - mean);
    m2 += d;
    m4 += d * d;
  }
  m2 /= static_cast<double>(n);
  m4 /= static_cast<double>(n);
  const double var = m2 * static_cast<double>(n) / static_cast<double>(n - 1);
  const double se_mean = std::sqrt(var / static_cast<double>(n));
  const double se_var = std::sqrt((m4 - m2 * m2) / static_cast<double>(n));
  const double mean_exact = numerics::digamma(a) - numerics::digamma(b);
  const double var_exact = numerics::trigamma(a) + numerics::trigamma(b);
  ctx.record(std::abs(mean - mean_exact) <= 4 * se_mean, "mean " + num(mean) + " vs psi0(a) - psi0(b) = " +
                                                             num(mean_exact) + ", |diff| " +
                                                             num(std::abs(mean - mean_exact), 3) + " <= 4SE " +
                                                             num(4 * se_mean, 3));
  ctx.record(std::abs(var - var_exact) <= 4 * se_var, "variance " + num(var) + " vs psi1(a) + psi1(b) = " +
                                                          num(var_exact) + ", |diff| " + num(std::abs(var - var_exact), 3) +
                                                          " <= 4SE " + num(4 * se_var, 3));
  const double theta_bar = 0.5 * std::min(a, b);
  const auto [dlo, dhi] = dist.mgf_domain();
  const bool inside = dlo < -theta_bar && theta_bar < dhi && std::isfinite(dist.mgf(theta_bar)) &&
                      std::isfinite(dist.mgf(-theta_bar));
  ctx.record(inside, "[-theta_bar, theta_bar] = [-" + num(theta_bar) + ", " + num(theta_bar) +
                         "] inside the MGF domain (" + num(dlo) + ", " + num(dhi) + ") with finite M at both ends");
}

void check_determinism(Context& ctx) {
  const std::vector<std::string> base{"simulate", "--dist", "expdiff(1.2,1)", "--n", "100000", "--x", "1",
                                      "--reps", "10000", "--seed", "42"};
  auto run = [&](const std::string& threads) {
    auto args = base;
    args.push_back("--threads");
    args.push_back(threads);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return std::make_pair(code, out.str());
  };
  const auto one = run("1");
  const auto again = run("1");
  const auto eight = run("8");
  ctx.record(one.first == 0 && eight.first == 0 && again.first == 0, "simulate exit codes " + std::to_string(one.first) +
                                                                          ", " + std::to_string(again.first) + ", " +
                                                                          std::to_string(eight.first));
  ctx.record(!one.second.empty() && one.second == again.second, "two runs with 1 thread are byte-identical (" +
                                                                    std::to_string(one.second.size()) + " bytes)");
  ctx.record(one.second == eight.second, "1 thread vs 8 threads byte-identical");
}

struct Entry {
  CheckInfo info;
  std::function<void(Context&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table{
      {{1, "brownian", "Brownian running maximum: reflection formula vs hitting-time integral", 5}, check_brownian},
      {{2, "feller", "Exponential walk supremum vs Monte Carlo at N = 1e6", 180}, check_feller},
      {{3, "ladder", "Catalan ladder-interval pmf and infinite mass", 120}, check_ladder},
      {{4, "gambler", "Two-sided exit vs gambler's ruin", 60}, check_gambler},
      {{5, "hitting", "Cylinder hitting-time tail bound", 600}, check_hitting},
      {{6, "iid", "Expected maximum of i.i.d. exponentials", 60}, check_iid},
      {{7, "tilt", "Tilt point and tilted mean", 1}, check_tilt},
      {{8, "constants", "Two-route constant consistency and c_tau(1)", 1}, check_constants},
      {{9, "scaling", "Scaling shape of P(max <= (log N)^2) at mu = -N^(-1/2)", 900}, check_scaling},
      {{10, "loggamma", "Log-gamma step moments and MGF domain", 60}, check_loggamma},
      {{11, "determinism", "simulate output identical across runs and thread counts", 60}, check_determinism},
  };
  return table;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

CheckResult run_check(const std::string& id, std::uint64_t seed, unsigned threads) {
  const auto& table = entries();
  const auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return e.info.id == id; });
  if (it == table.end()) throw ConfigError("unknown check '" + id + "'");
  Context ctx{seed, threads, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    it->run(ctx);
  } catch (const std::exception& e) {
    ctx.record(false, std::string("check aborted: ") + e.what());
  }
  CheckResult r;
  r.number = it->info.number;
  r.id = it->info.id;
  r.title = it->info.title;
  r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.budget_s = it->info.budget_s;
  ctx.record(r.elapsed_s <= r.budget_s, "runtime " + num(r.elapsed_s, 3) + " s <= " + num(r.budget_s) + " s");
  r.pass = ctx.pass;
  r.lines = std::move(ctx.lines);
  return r;
}

std::string format_check(const CheckResult& r, bool verbose) {
  std::string s = std::string(r.pass ? "PASS" : "FAIL") + "  criterion " + std::to_string(r.number) + " [" + r.id +
                  "] " + r.title + " (" + num(r.elapsed_s, 3) + " s)\n";
  for (const auto& line : r.lines)
    if (verbose || line.rfind("[VIOLATED]", 0) == 0 || line.rfind("[ok]", 0) == 0) s += "      " + line + "\n";
  return s;
}

}  // namespace driftmax::cli
