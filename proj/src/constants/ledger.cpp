#include "driftmax/constants/ledger.hpp"

#include <cmath>
#include <limits>

#include "driftmax/constants/theorem_constants.hpp"
#include "driftmax/constants/tilt.hpp"
#include "driftmax/error.hpp"

namespace driftmax::constants {

using walks::format_real;

namespace {

struct Builder {
  std::vector<LedgerEntry> entries;

  // Records lhs ≤ rhs.
  void le(std::string id, std::string description, double lhs, double rhs) {
    const bool pass = lhs <= rhs;
    std::string text = format_real(lhs) + " <= " + format_real(rhs);
    entries.push_back({std::move(id), std::move(description), std::move(text), lhs, rhs, pass});
  }
  void fail(std::string id, std::string description, std::string reason) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    entries.push_back({std::move(id), std::move(description), std::move(reason), nan, nan, false});
  }
};

// Conditions that involve N. Logs are used throughout so that nothing
// overflows for N up to 2^63 or for huge C3.
void add_n_conditions(Builder& b, const walks::AssumptionParams& p, double mu, double c_m, double log_c3,
                      double ctau, double y0v) {
  const double n = static_cast<double>(p.N);
  const double L = std::log(n);
  b.le("e", "c_m (2 + c_mu) (log N)^-1 <= log 2", c_m * (2.0 + p.c_mu) / L, std::log(2.0));

  const double log_hb = 6.0 * std::log(L) - 2.0 * std::log(p.c_mu);  // log(c_mu^-2 (log N)^6)
  b.le("f.1", "log[c_mu^-2 (log N)^6] >= 1/theta_bar", 1.0 / p.theta_bar, log_hb);
  const double lhs_f2 = std::log(c_m) - log_c3 - 0.5 * std::log(p.C_M) + 2.0 * std::log(std::max(log_hb, 0.0));
  b.le("f.2", "log[c_m C3^-1 C_M^-1/2 (log[c_mu^-2 (log N)^6])^2] >= 1/(2 theta_bar)", 0.5 / p.theta_bar, lhs_f2);

  b.le("g", "log N^{1 - theta_bar (log N)^2} <= log (log N)^-1", (1.0 - p.theta_bar * L * L) * L, -std::log(L));

  const double H = horizon(mu, p.N);
  b.le("h", "y0 <= (log N)^-1 H_N^1/2", y0v, std::sqrt(H) / L);

  const double log_rhs = 3.0 * std::log(L) - 0.5 * L;
  b.le("i.1", "log 2e^{-c_tau (log N)^2} <= log (log N)^3 N^-1/2", std::log(2.0) - ctau * L * L, log_rhs);
  b.le("i.2", "log C_M N e^{-theta_bar (log N)^2} <= log (log N)^3 N^-1/2",
       std::log(p.C_M) + L - p.theta_bar * L * L, log_rhs);
}

std::vector<LedgerEntry> evaluate(const walks::StepDistribution& dist, const walks::AssumptionParams& p) {
  Builder b;
  const double mu = dist.mean();
  const double amu = std::abs(mu);
  const double c_m = 2.0 / p.sigma_star2;
  const double ctau = c_tau(p.sigma_star2);
  const double y0v = y0(p.C_M, p.sigma_star2, p.theta_bar);
  const double log_c3 = 2.0 * p.C_M * c_m * c_m + 4.0 * c_m;

  b.le("a", "C_M |mu| <= sigma_star2 / 3", p.C_M * amu, p.sigma_star2 / 3.0);

  std::optional<double> theta0;
  std::string tilt_failure;
  try {
    theta0 = tilt_point(dist, p);
  } catch (const Error& e) {
    tilt_failure = e.what();
  }
  if (theta0) {
    b.le("b.1", "|theta0| <= theta_bar / 2", std::abs(*theta0), p.theta_bar / 2.0);
    b.le("c", "theta0 <= sigma_star2 / (2 C_M)", *theta0, p.sigma_star2 / (2.0 * p.C_M));
  } else {
    b.fail("b.1", "|theta0| <= theta_bar / 2", "theta0 unavailable: " + tilt_failure);
    b.fail("c", "theta0 <= sigma_star2 / (2 C_M)", "theta0 unavailable: " + tilt_failure);
  }
  b.le("b.2", "-mu <= 2", -mu, 2.0);

  b.le("d.1", "(2/3) c_m |mu| <= 1", 2.0 / 3.0 * c_m * amu, 1.0);
  b.le("d.2", "c_m mu^2 + C_M c_m^3 |mu|^3 <= 1/2", c_m * mu * mu + p.C_M * c_m * c_m * c_m * amu * amu * amu, 0.5);
  b.le("d.3", "C_M c_m^3 |mu| <= 1", p.C_M * c_m * c_m * c_m * amu, 1.0);

  add_n_conditions(b, p, mu, c_m, log_c3, ctau, y0v);
  return std::move(b.entries);
}

bool all_pass(const std::vector<LedgerEntry>& entries) {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

}  // namespace

FeasibilityLedger n0_ledger(const walks::StepDistribution& dist, const walks::AssumptionParams& params) {
  params.validate();
  FeasibilityLedger ledger{params.N, dist.mean(), evaluate(dist, params), false, std::nullopt};
  ledger.pass = all_pass(ledger.entries);
  if (dist.mean() > 0.0) return ledger;

  auto passes_at = [&](std::uint64_t n) {
    walks::AssumptionParams q = params;
    q.N = n;
    return all_pass(evaluate(dist, q));
  };
  // Scan powers of two, then bisect inside the first passing octave.
  std::uint64_t lo = 1;
  for (int k = 1; k <= 63; ++k) {
    const std::uint64_t hi = std::uint64_t{1} << k;
    if (passes_at(hi)) {
      std::uint64_t good = hi;
      std::uint64_t bad = lo;
      while (good - bad > 1) {
        const std::uint64_t mid = bad + (good - bad) / 2;
        if (mid >= 2 && passes_at(mid))
          good = mid;
        else
          bad = mid;
      }
      ledger.minimal_N = good;
      break;
    }
    lo = hi;
  }
  return ledger;
}

}  // namespace driftmax::constants
