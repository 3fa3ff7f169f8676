#include <cmath>
#include <random>

#include "doctest.h"
#include "driftmax/constants.hpp"
#include "driftmax/error.hpp"
#include "driftmax/walks.hpp"

using namespace driftmax;
using namespace driftmax::constants;
using walks::AssumptionParams;

namespace {

// Golden-section minimization, independent of the Brent root finder.
template <class F>
double golden_min(F f, double a, double b) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  while (b - a > 1e-13) {
    if (f(c) < f(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - g * (b - a);
    d = a + g * (b - a);
  }
  return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("c_tau and y0") {
  CHECK(std::abs(c_tau(1.0) - 0.023012909328963488465) <= 1e-15);
  CHECK(std::abs(c_tau(4.0) - 0.17275377902344988953) <= 1e-15);
  CHECK(c_tau(1e-6) <= 1e-9);
  CHECK(c_tau(1e-6) >= 0.0);
  for (double s2 : {0.01, 0.1, 1.0, 5.0, 100.0}) {
    CHECK(c_tau(s2) > 0.0);
    CHECK(c_tau(s2) < std::log(2.0));
  }
  CHECK(std::abs(y0(1.0, 1.0) - 131.8673670479569747) <= 1e-11);
  CHECK(y0(0.001, 1.0) == 1.0);
  CHECK(std::abs(y0(1.0, 4.0) - 2.3636153906507827859) <= 1e-13);
  CHECK_THROWS_AS(c_tau(0.0), DomainError);
  CHECK_THROWS_AS(y0(-1.0, 1.0), DomainError);
}

TEST_CASE("magnitude arithmetic") {
  const auto a = Magnitude::from_value(3.0);
  const auto b = Magnitude::from_value(4.0);
  CHECK((a + b).value() == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(a.scaled(2.5).value() == doctest::Approx(7.5).epsilon(1e-15));
  CHECK(a.exp().value() == doctest::Approx(std::exp(3.0)).epsilon(1e-15));
  const auto huge = Magnitude::from_log(5000.0);
  CHECK(huge.overflow());
  CHECK(huge.exp().log_log() == 5000.0);
  CHECK(huge.exp().exp().log_log() == std::numeric_limits<double>::infinity());
  CHECK((huge + a).log() == 5000.0);
  CHECK(Magnitude().value() == 1.0);
  CHECK(a < b);
  CHECK(b < huge);
  CHECK(relative_log_difference(huge, Magnitude::from_log(5000.0 * (1 + 1e-12))) == doctest::Approx(1e-12).epsilon(1e-3));
  CHECK(Magnitude::from_log_log(10.0).to_string().rfind("exp(", 0) == 0);
  CHECK(Magnitude::from_value(2.5).to_string() == "2.5");
}

TEST_CASE("theorem constants at unit parameters") {
  const auto tc = theorem_constants(AssumptionParams{1.0, 1.0, 1.0, 1.0, 1 << 20});
  CHECK(tc.c_m == 2.0);
  CHECK(tc.C0.value() == doctest::Approx(772271868.5911262424).epsilon(1e-12));
  CHECK(tc.C_A.value() == doctest::Approx(1544544090.4397461836).epsilon(1e-12));
  CHECK(tc.C.log() == doctest::Approx(6178176363.1452790954).epsilon(1e-12));
  CHECK(tc.C.overflow());
  CHECK(tc.overflow);
  CHECK(tc.C0_relative_gap <= 1e-12);
  CHECK(tc.C_relative_gap <= 1e-9);
  CHECK(tc.C10.value() == doctest::Approx(tc.C0.value() + 2.0 / tc.c_tau).epsilon(1e-14));
  CHECK(tc.C11.value() == doctest::Approx(tc.C0.value() + 4.0 / tc.c_tau).epsilon(1e-14));
  CHECK(tc.C3.log() == doctest::Approx(16.0).epsilon(1e-15));
  CHECK(!tc.H_N.has_value());
}

TEST_CASE("two routes to C agree on random tuples") {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> u(0.1, 5.0);
  for (int i = 0; i < 100; ++i) {
    const AssumptionParams p{u(gen), u(gen), u(gen), u(gen), 1000};
    const auto tc = theorem_constants(p);
    INFO(p.C_M << " " << p.theta_bar << " " << p.sigma_star2 << " " << p.c_mu);
    CHECK(tc.C_relative_gap <= 1e-9);
    CHECK(tc.C0_relative_gap <= 1e-9);
    CHECK(tc.C0.value() >= 2.0);
  }
}

TEST_CASE("horizon and trial ladder") {
  CHECK(horizon(-0.01, 1000000) == doctest::Approx(1e4).epsilon(1e-14));
  CHECK(horizon(0.0, 1000) == 1000.0);
  CHECK(horizon(-1e-6, 1000) == 1000.0);
  CHECK_THROWS_AS(horizon(0.1, 1000), DomainError);

  const std::uint64_t n = 1 << 20;
  const double h = horizon(-1.0 / 1024.0, n);
  CHECK(h == doctest::Approx(1048576.0));
  const auto ladder = trial_ladder(4.0, n, h);
  CHECK(ladder.K == 2);
  CHECK(ladder.L == std::vector<std::int64_t>{1, 5, 13});
  CHECK(!ladder.empty());

  const double L = std::log(double(n));
  CHECK(trial_ladder(L * L, n, h).empty());

  for (double x : {0.5, 1.0, 3.0, 7.0})
    for (std::uint64_t N : {std::uint64_t{1000}, std::uint64_t{1} << 16, std::uint64_t{1} << 30})
      for (double mu : {0.0, -1e-3, -1e-5}) {
        const auto lad = trial_ladder(x, N, horizon(mu, N));
        if (lad.K < 0) continue;
        CHECK(x * lad.L.back() <= lad.cylinder);
        CHECK(lad.cylinder < x * ((std::int64_t{1} << (lad.K + 3)) - 3) * 4);
        for (std::size_t i = 1; i < lad.L.size(); ++i) CHECK(lad.L[i] == 2 * lad.L[i - 1] + 3);
      }
}

TEST_CASE("horizon respects the drift window") {
  for (double c_mu : {0.5, 1.0, 2.0})
    for (std::uint64_t N : {std::uint64_t{100}, std::uint64_t{1} << 20, std::uint64_t{1} << 30, std::uint64_t{1} << 40})
      for (double frac : {0.0, 0.1, 0.5, 1.0}) {
        const double L = std::log(double(N));
        if (std::pow(L, 6) / (c_mu * c_mu) > double(N)) continue;  // window empty below this N
        const double mu = -frac * c_mu / (L * L * L);
        const double h = horizon(mu, N);
        CHECK(h <= double(N));
        CHECK(std::pow(L, 6) / (c_mu * c_mu) <= h * (1 + 1e-12));
      }
}

TEST_CASE("tilt point") {
  const AssumptionParams p{2.0, 1.0, 1.0, 1.0, 1000};
  CHECK(tilt_point(walks::GaussianShift(0.0, 1.0), p) == 0.0);
  for (double m : {0.01, 0.05, 0.1}) CHECK(std::abs(tilt_point(walks::GaussianShift(-m, 1.0), p) - m) <= 1e-10);

  const walks::StepDistribution e = walks::ExpDifference(1.05, 1.0);
  const double t0 = tilt_point(e, p);
  CHECK(std::abs(e.mgf_deriv(t0, 1)) <= 1e-10);
  CHECK(t0 >= 0.0);
  CHECK(t0 <= 2.0 * std::abs(e.mean()));
  // The minimum of M is flat to second order, so a direct minimizer only
  // resolves the argmin to about sqrt(machine epsilon); compare values.
  const double tg = golden_min([&](double t) { return e.mgf(t); }, 0.0, 2.0 * std::abs(e.mean()));
  CHECK(std::abs(e.mgf(t0) - e.mgf(tg)) <= 1e-10);
  CHECK(std::abs(t0 - tg) <= 1e-7);
  CHECK(std::abs(t0 - 0.025) <= 1e-12);
  const double d = 1e-4 * p.theta_bar;
  CHECK(e.mgf(t0) <= e.mgf(t0 + d));
  CHECK(e.mgf(t0) <= e.mgf(t0 - d));
  CHECK(e.mgf(t0) <= 1.0);

  const walks::StepDistribution lg = walks::LogGammaDifference(1.5, 1.6);
  const double tl = tilt_point(lg, AssumptionParams{1.0, 0.5, 0.5, 1.0, 1000});
  CHECK(std::abs(lg.mgf_deriv(tl, 1)) <= 1e-12);

  CHECK_THROWS_AS(tilt_point(walks::GaussianShift(0.1, 1.0), p), PreconditionError);
  CHECK_THROWS_AS(tilt_point(walks::GaussianShift(-1.0, 1.0), p), PreconditionError);
}

TEST_CASE("tilted moments") {
  const walks::StepDistribution g = walks::GaussianShift(-0.05, 1.0);
  const auto q = tilted_moments(g, 0.05);
  CHECK(std::abs(q.q_mean) <= 1e-15);
  CHECK(q.q_variance == doctest::Approx(1.0).epsilon(1e-14));

  const walks::StepDistribution r = walks::Rademacher(0.5);
  const auto q0 = tilted_moments(r, 0.0);
  CHECK(q0.q_mean == 0.0);
  CHECK(q0.q_second_moment == doctest::Approx(r.second_moment()));
  CHECK(q0.q_variance == doctest::Approx(r.variance()));

  const AssumptionParams p{2.0, 1.0, 1.0, 1.0, 1000};
  const walks::StepDistribution e = walks::ExpDifference(1.05, 1.0);
  const auto qe = tilted_moments(e, tilt_point(e, p), p);
  CHECK(std::abs(qe.q_mean) <= 1e-10);
  CHECK(qe.second_moment_ceiling.has_value());
  CHECK_THROWS_AS(tilted_moments(e, 5.0), DomainError);
}

TEST_CASE("feasibility ledger") {
  const AssumptionParams unit{1.0, 1.0, 1.0, 1.0, 1000000};
  const auto led = n0_ledger(walks::GaussianShift(0.0, 1.0), unit);
  auto find = [](const FeasibilityLedger& l, const std::string& id) {
    for (const auto& e : l.entries)
      if (e.id == id) return e;
    FAIL("missing ledger entry " << id);
    return l.entries.front();
  };
  CHECK(find(led, "a").pass);
  CHECK(!led.pass);                  // (f.2) needs astronomically large N
  CHECK(!led.minimal_N.has_value());
  CHECK(led.entries.size() == 14);

  // log N >= 6 / log 2 = 8.6562, i.e. N >= e^{8.6562} = 5745.49.
  for (std::uint64_t n : {std::uint64_t{5745}, std::uint64_t{5746}}) {
    AssumptionParams p = unit;
    p.N = n;
    CHECK(find(n0_ledger(walks::GaussianShift(0.0, 1.0), p), "e").pass == (n == 5746));
  }
  for (std::uint64_t n : {std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{10}, std::uint64_t{1} << 40}) {
    AssumptionParams p = unit;
    p.N = n;
    CHECK(find(n0_ledger(walks::GaussianShift(0.0, 1.0), p), "g").pass);
  }

  // Small C_M and large variance floor: every condition holds from some N on.
  const walks::StepDistribution wide = walks::GaussianShift(0.0, 4.0);
  const AssumptionParams easy{0.1, 1.0, 4.0, 1.0, 1000};
  const auto ok = n0_ledger(wide, easy);
  REQUIRE(ok.minimal_N.has_value());
  AssumptionParams at = easy;
  at.N = *ok.minimal_N;
  CHECK(n0_ledger(wide, at).pass);
  at.N = *ok.minimal_N - 1;
  CHECK(!n0_ledger(wide, at).pass);
  const auto bad = n0_ledger(walks::GaussianShift(-1.0, 1.0), unit);
  CHECK(!find(bad, "a").pass);
  CHECK(!find(bad, "b.1").pass);
  CHECK(!bad.minimal_N.has_value());
}
