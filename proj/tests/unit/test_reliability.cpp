#include <doctest.h>

#include <cmath>

#include "cigf/errors.hpp"
#include "cigf/reliability.hpp"

using namespace cigf;
using doctest::Approx;

TEST_CASE("order statistic series match quadrature")
{
    CigfOptions q;
    q.path = CigfOptions::Path::quadrature;
    auto u = uniform(0.0, 1.0);
    for (int n : {2, 3}) {
        CHECK(cigf_max_series(u, n, {1, 1}).value ==
              Approx(cigf::cigf(max_order_statistic(u, n), {1, 1}, {}, q).value).epsilon(1e-9));
        CHECK(cigf_min_series(exponential(1.0), n, {0.5, 1}).value ==
              Approx(cigf::cigf(min_order_statistic(exponential(1.0), n), {0.5, 1}, {}, q).value).epsilon(1e-9));
    }
    // maximum of two exponential(1) draws
    CHECK(cigf::cigf(max_order_statistic(exponential(1.0), 2), {1, 0.5}).value ==
          Approx(1.45206483006411498).epsilon(1e-9));
    CHECK_THROWS_AS(cigf_max_series(exponential(1.0), 2, {1, 1}), DomainError);
}

TEST_CASE("expected order statistics")
{
    for (int k = 1; k <= 4; ++k) CHECK(korn_mean(uniform(0.0, 1.0), k, 4).value == Approx(k / 5.0).epsilon(1e-10));
    CHECK(korn_mean(exponential(1.0), 2, 3).value == Approx(1.0 / 3.0 + 1.0 / 2.0).epsilon(1e-9));
    CHECK(korn_mean(uniform(2.0, 3.0), 1, 1).value == Approx(2.5).epsilon(1e-10));
}

TEST_CASE("stress with the strength law gives 1 - k/(n+1)")
{
    SystemSpec s{2, 1, exponential(1.0), exponential(1.0)};
    CHECK(rkn_general(s).value == Approx(2.0 / 3.0).epsilon(1e-10));
    s.k = 0;
    CHECK(rkn_general(s).value == 1.0);
    for (int k = 0; k <= 10; ++k) CHECK(rkn_power_closed(1.0, k, 10) == Approx(1.0 - k / 11.0).epsilon(1e-14));
}

TEST_CASE("power strengths, uniform stress: all analytic paths agree")
{
    auto x = power(2.0);
    CHECK(rkn_power_closed(2.0, 1, 2) == Approx(0.8));
    auto rec = rkn_recurrence(x, 6, 0.0, 1.0);
    for (int k = 0; k <= 6; ++k) {
        double cf = rkn_power_closed(2.0, k, 6);
        CHECK(rec[k] == Approx(cf).epsilon(1e-10));
        CHECK(rkn_uniform_stress(x, k, 6, 0.0, 1.0).value == Approx(cf).epsilon(1e-10));
        CHECK(rkn_general({6, k, x, uniform(0.0, 1.0)}).value == Approx(cf).epsilon(1e-9));
    }
}

TEST_CASE("Monte Carlo is reproducible and within its error band")
{
    MonteCarloConfig mc;
    mc.n_trials = 200000;
    SystemSpec s{4, 2, power(0.5), uniform(0.0, 1.0)};
    auto a = rkn_monte_carlo(s, mc);
    auto b = rkn_monte_carlo(s, mc);
    CHECK(a.value == b.value);
    CHECK(std::fabs(a.value - rkn_power_closed(0.5, 2, 4)) <= a.err_est);
    auto prof = rkn_monte_carlo_profile(power(0.5), uniform(0.0, 1.0), 4, mc);
    CHECK(prof.size() == 5);
    CHECK(prof[0].value == 1.0);
}

TEST_CASE("plot data")
{
    auto rows = figure1_data({0.5, 2.0}, 5);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0].theta == 0.5);
    CHECK(rows[0].k == 0);
    CHECK(rows[7].r == Approx(rkn_power_closed(2.0, 1, 5)));
}

TEST_CASE("invalid systems")
{
    SystemSpec s{3, 4, uniform(0.0, 1.0), uniform(0.0, 1.0)};
    CHECK_THROWS_AS(s.validate(), DomainError);
}
