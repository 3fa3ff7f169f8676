#include <cmath>
#include <vector>

#include "doctest.h"
#include "driftmax/constants.hpp"
#include "driftmax/error.hpp"
#include "driftmax/oracles.hpp"

using namespace driftmax;
using namespace driftmax::oracles;

TEST_CASE("theorem bound") {
  CHECK(thm_bound(1.0, 1000, 0.0, -0.1).value == 0.0);
  const auto b = thm_bound(1.0, 22026, 2.0, -0.05);
  CHECK(b.value == doctest::Approx(0.99999788527248898489).epsilon(1e-14));
  CHECK(!b.vacuous);

  const std::uint64_t n = 1 << 20;
  const double L = std::log(double(n));
  const auto tc = constants::theorem_constants(walks::AssumptionParams{1.0, 1.0, 1.0, 1.0, n});
  const auto big = thm_bound(tc.C, n, L * L, -1.0 / std::sqrt(double(n)));
  CHECK(big.vacuous);
  CHECK(big.log_value > 1e9);

  double prev = 0.0;
  for (double x = 0.5; x < 20; x += 0.5) {
    const double v = thm_bound(2.0, 5000, x, -0.01).value;
    CHECK(v >= prev);
    prev = v;
  }
  prev = 0.0;
  for (double mu = 0.0; mu > -1.0; mu -= 0.05) {
    const double v = thm_bound(2.0, 5000, 3.0, mu).value;
    CHECK(v >= prev);
    prev = v;
  }
  CHECK_THROWS_AS(thm_bound(1.0, 1, 1.0, -0.1), DomainError);
  CHECK_THROWS_AS(thm_bound(1.0, 100, 1.0, 0.1), DomainError);
}

TEST_CASE("exponential supremum") {
  CHECK(exp_sup_cdf(2.0, 1.0, std::log(2.0)) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(exp_sup_cdf(2.0, 1.0, 0.0) == 0.5);
  CHECK(std::abs(exp_sup_cdf(1.2, 1.0, 1.0) - 0.3177243724350151001) <= 1e-15);
  CHECK(std::abs(exp_sup_cdf(1.2, 1.0, 0.5) - 0.24596881830336699864) <= 1e-15);
  CHECK(std::abs(exp_sup_cdf(1.2, 1.0, 2.0) - 0.44139996163696724111) <= 1e-15);
  double prev = 0.0;
  for (double x = 0.0; x < 200.0; x += 0.7) {
    const double v = exp_sup_cdf(1.3, 1.1, x);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(exp_sup_cdf(1.3, 1.1, 500.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(exp_sup_cdf(3.0, 1.0, 0.0) == doctest::Approx(1.0 - 1.0 / 3.0));
  CHECK_THROWS_AS(exp_sup_cdf(1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("ladder pmf") {
  CHECK(ladder_interval_pmf(2.0, 1.0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(ladder_interval_pmf(2.0, 1.0, 2) == doctest::Approx(2.0 / 27.0).epsilon(1e-13));
  CHECK(ladder_interval_pmf(2.0, 1.0, 3) == doctest::Approx(8.0 / 243.0).epsilon(1e-13));
  CHECK(ladder_infinite_mass(2.0, 1.0) == 0.5);
  for (auto [a, b] : std::vector<std::pair<double, double>>{{2, 1}, {1.2, 1}, {1.05, 1}, {5, 0.3}}) {
    const auto norm = ladder_normalization(a, b);
    CHECK(std::abs(norm.total - 1.0) <= 1e-10);
    CHECK(norm.tail_bound < 1e-12);
    CHECK(norm.finite_mass == doctest::Approx(b / a).epsilon(1e-10));
  }
  // C_500 overflows binary64; the pmf term does not.
  const double p500 = ladder_interval_pmf(1.01, 1.0, 501);
  CHECK(std::isfinite(p500));
  CHECK(p500 > 0.0);
  CHECK_THROWS_AS(ladder_interval_pmf(1.0, 2.0, 1), DomainError);
  CHECK_THROWS_AS(ladder_interval_pmf(2.0, 1.0, 0), DomainError);
}

TEST_CASE("ladder epoch mean") {
  CHECK(ladder_epoch_mean_time(2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ladder_epoch_mean_time(1.1, 1.0) == doctest::Approx(110.0).epsilon(1e-12));
  CHECK(ladder_epoch_mean_time(1.001, 1.0) == doctest::Approx(1.001 * 1e6).epsilon(1e-9));
  CHECK_THROWS_AS(ladder_epoch_mean_time(1.0, 1.0), DomainError);
}

TEST_CASE("brownian running maximum") {
  CHECK(std::abs(bm_max_cdf(0.0, 1.0, 1.0) - 0.68268949213708589717) <= 1e-14);
  CHECK(std::abs(bm_max_cdf(-1.0, 1.0, 1.0) - 0.90958222643351444685) <= 1e-14);
  CHECK(std::abs(bm_max_cdf(-0.01, 1.0, 3.0) - 0.9973801062244945509) <= 1e-14);
  CHECK(bm_max_cdf(-1.0, 1.0, 1e6) == 1.0);
  CHECK(std::abs(bm_max_cdf_integral(-1.0, 1.0) - 0.90958222643351444685) <= 1e-8);
  CHECK(std::abs(bm_max_cdf_integral(-0.01, 3.0) - 0.9973801062244945509) <= 1e-8);
  CHECK(std::abs(bm_max_cdf_integral(-1.0, 40.0) - 1.0) <= 1e-12);
  for (double b : {0.1, 0.5, 1.0, 2.0, 3.0})
    for (double mu : {-2.0, -1.0, -0.5, -0.1, -0.01}) {
      INFO(b << " " << mu);
      CHECK(std::abs(bm_max_cdf(mu, 1.0, b) - bm_max_cdf_integral(mu, b)) <= 1e-8);
    }
  CHECK_THROWS_AS(bm_max_cdf_integral(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(bm_max_cdf(0.0, 0.0, 1.0), DomainError);
}

TEST_CASE("kmt bound") {
  const auto k = kmt_bound(1.0, 100, -0.1, 1.0, 1.0);
  REQUIRE(k.components.size() == 3);
  CHECK(std::abs(k.components[0].second - 0.0024821602362195316961) <= 1e-15);
  CHECK(std::abs(k.components[1].second - 0.32000690916375695852) <= 1e-14);
  CHECK(std::abs(k.components[2].second - 0.67405741644699065227) <= 1e-14);
  CHECK(std::abs(k.value - 0.99654648584696714248) <= 1e-14);

  // Small drift regime: the drift term dominates the power term.
  const auto r = kmt_bound(20.0, 1000000, -1e-3, 1.0, 1.0);
  CHECK(r.components[1].second > 100 * r.components[0].second);
  const double simplified = 20.0 * (std::pow(1e6, -1.5) / 1e-6 + 1e-3);
  CHECK(r.components[1].second <= 10 * simplified);

  double prev = 0.0;
  for (double x = 0.5; x < 10; x += 0.5) {
    const double e = kmt_bound(x, 1000, -0.05, 1.0, 1.0).components[2].second;
    CHECK(e >= prev);
    prev = e;
  }
  prev = 0.0;
  for (double mu = -0.01; mu > -1.0; mu -= 0.05) {
    const double e = kmt_bound(2.0, 1000, mu, 1.0, 1.0).components[2].second;
    CHECK(e >= prev);
    prev = e;
  }
  CHECK_THROWS_AS(kmt_bound(1.0, 50, -0.1, 1.0, 1.0), DomainError);
}

TEST_CASE("berry-esseen and simple ceilings") {
  CHECK(berry_esseen_gap(1.0, 1.0, 9) == doctest::Approx(1.0));
  CHECK(berry_esseen_gap(1.0, 1.0, 10000) == doctest::Approx(0.03));
  CHECK(berry_esseen_gap(1.0, 1.5957691216057307118, 1000000) == doctest::Approx(0.0047873073648171921).epsilon(1e-12));
  CHECK(hitting_tail_bound(0.023013, 0.0) == 2.0);
  CHECK(max_of_iid_bound(0.5, 2.0, 100) == doctest::Approx(std::log(201.0) / 0.5));
}

TEST_CASE("gaussian lower bound") {
  const auto g = gaussian_lower_bound(1.0, -1.0, 10000);
  CHECK(g.lower_bound == doctest::Approx(0.01));
  CHECK(std::abs(g.exact - 0.019801326693244698187) <= 1e-15);
  CHECK(g.chain_holds);
  CHECK(gaussian_lower_bound(0.0, -1.0, 100).lower_bound == 0.0);
  const auto h = gaussian_lower_bound(5.0, -0.5, 100);
  CHECK(h.lower_bound == doctest::Approx(0.25));
  CHECK(std::abs(h.exact - 0.3934693402873665764) <= 1e-15);
  CHECK(!gaussian_lower_bound(20.0, -1.0, 100).chain_holds);
}

TEST_CASE("gambler's ruin") {
  CHECK(gamblers_ruin_up(0.5, 5) == 0.5);
  CHECK(std::abs(gamblers_ruin_up(0.45, 5) - 0.26828259881871870916) <= 1e-15);
  CHECK(gamblers_ruin_up(0.5, 1, 3) == 0.75);
  CHECK(gamblers_ruin_up(0.3, 2, 2) == doctest::Approx(0.09 / (0.09 + 0.49)));
}

TEST_CASE("exit lower bound is vacuous at unit constants") {
  const walks::AssumptionParams p{1.0, 1.0, 1.0, 1.0, 1000000};
  const auto tc = constants::theorem_constants(p);
  const double lb = exit_lower_bound(tc, p, 30.0, 1e6);
  CHECK(lb < 0.0);
  CHECK(exit_lower_bound(tc, p, 30.0, 1e6, 10.0) <= lb);
}
