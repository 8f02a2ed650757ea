#include <doctest.h>

#include <cmath>

#include "cigf/bounds.hpp"

using namespace cigf;
using doctest::Approx;

TEST_CASE("all bounds hold on the built-in families")
{
    for (const auto& x : {uniform(0.0, 1.0), power(2.0), exponential(1.0), erlang2(1.0), bernoulli(0.3)}) {
        auto rep = verify_bounds(x, default_bounds_grid());
        CHECK_MESSAGE(rep.all_pass(), x.label());
        CHECK(rep.failures() == 0);
        CHECK_FALSE(rep.checks.empty());
    }
}

TEST_CASE("Chernoff bound is an upper bound for positive exponents")
{
    auto cs = chernoff_grid(exponential(1.0), {1, 1});
    CHECK(cs.admissible > 0);
    CHECK(cs.best.side == BoundSide::upper);
    CHECK(cs.best.bound >= 0.5);
}

TEST_CASE("erlang Chernoff infimum")
{
    CHECK(erlang2_chernoff_infimum(1.0, 1.0) == Approx(27.0 / 4.0));
    double ratio = chernoff_grid(erlang2(1.0), {1, 1}).best.bound / erlang2_chernoff_infimum(1.0, 1.0);
    CHECK(ratio >= 1.0);
    CHECK(ratio <= 1.2);
}

TEST_CASE("Hölder equality on two-point laws")
{
    auto b = bernoulli(0.3);
    CHECK(holder_bound(b, 0.4) == Approx(cigf::cigf(b, {0.4, 0.6}).value).epsilon(1e-12));
    CHECK(holder_bound(uniform(0.0, 1.0), 0.5) > cigf::cigf(uniform(0.0, 1.0), {0.5, 0.5}).value);
}

TEST_CASE("Bernoulli and Minkowski forms")
{
    auto u = uniform(0.0, 1.0);
    auto bb = bernoulli_bounds(u, {0.5, 1.0});
    REQUIRE(bb.applicable());
    CHECK(cigf::cigf(u, {0.5, 1.0}).value <= *bb.k_form + 1e-12);
    auto mk = minkowski_bounds(u, 2.0);
    CHECK(mk.k_value >= mk.k_lower - 1e-12);
    CHECK(mk.k_value <= mk.k_upper + 1e-12);
    CHECK(mk.h_value <= mk.h_upper + 1e-12);
}
