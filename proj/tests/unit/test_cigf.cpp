#include <doctest.h>

#include <cmath>

#include "cigf/cigf.hpp"
#include "cigf/errors.hpp"

using namespace cigf;
using doctest::Approx;

namespace {
CigfOptions quad()
{
    CigfOptions o;
    o.path = CigfOptions::Path::quadrature;
    return o;
}
}  // namespace

TEST_CASE("closed forms at (1,1)")
{
    CHECK(cigf::cigf(exponential(1.0), {1, 1}).value == Approx(0.5));
    CHECK(cigf::cigf(uniform(0.0, 1.0), {1, 1}).value == Approx(1.0 / 6.0));
    CHECK(cigf::cigf(power(2.0), {1, 1}).value == Approx(2.0 / 15.0));
    CHECK(cigf::cigf(bernoulli(0.3), {1, 1}).value == Approx(0.21));
    CHECK(cigf::cigf(laplace(1.0), {1, 1}).value == Approx(0.75));
    CHECK(cigf::cigf(degenerate(3.0), {1, 1}).value == 0.0);
}

TEST_CASE("quadrature agrees with closed forms")
{
    for (const auto& x : {uniform(1.0, 3.0), power(0.5), exponential(2.0), laplace(1.5)}) {
        for (double a : {0.5, 2.0}) {
            for (double b : {0.5, 1.0}) {
                double cf = *cigf_closed_form(x, {a, b});
                CHECK(cigf::cigf(x, {a, b}, {}, quad()).value == Approx(cf).epsilon(1e-9));
            }
        }
    }
    CHECK(cigf::cigf(laplace(1.0), {0.5, 0.5}, {}, quad()).value == Approx(2.5707963267948966).epsilon(1e-9));
}

TEST_CASE("erlang series")
{
    CHECK(cigf_erlang_series(1.0, {1, 1}).value == Approx(0.75).epsilon(1e-10));
    CHECK(cigf_erlang_series(1.0, {0.5, 2}).value == Approx(0.51385585034913513).epsilon(1e-7));
    CHECK(cigf::cigf(erlang2(1.0), {0.5, 2}, {}, quad()).value == Approx(0.51385585034913513).epsilon(1e-9));
}

TEST_CASE("domain membership")
{
    CHECK(in_domain(exponential(1.0), {1, 0}) == DomainStatus::outside);
    CHECK(in_domain(exponential(1.0), {1, 1}) == DomainStatus::inside);
    CHECK(in_domain(uniform(0.0, 1.0), {-0.5, -0.5}) == DomainStatus::inside);
    CHECK(in_domain(uniform(0.0, 1.0), {-1.0, 1.0}) == DomainStatus::outside);
    CHECK_THROWS_AS(cigf::cigf(exponential(1.0), {1, 0}), DomainError);
    CHECK_THROWS_AS(h_measure(exponential(1.0), 1.0), DomainError);
}

TEST_CASE("one-argument measures and odds")
{
    auto u = uniform(0.0, 2.0);
    CHECK(h_measure(u, 1.0).value == Approx(1.0));
    CHECK(k_measure(u, 2.0).value == Approx(2.0 / 3.0));
    CHECK(cigf_odds(uniform(0.0, 1.0), 0.5).value == Approx(M_PI / 2.0).epsilon(1e-9));
}

TEST_CASE("affine transformation")
{
    auto [lhs, rhs] = cigf_affine_check(exponential(1.0), 2.0, 1.0, {0.5, 2.0});
    CHECK(lhs.value == Approx(rhs.value).epsilon(1e-9));
    auto [l2, r2] = cigf_affine_check(power(2.0), -1.5, 0.0, {2.0, 0.5});
    CHECK(l2.value == Approx(r2.value).epsilon(1e-9));
}

TEST_CASE("beta and equilibrium representations")
{
    auto mc = cigf_beta_representation(exponential(1.0), {1, 1}, 200000, 7);
    CHECK(std::fabs(mc.value - 0.5) <= mc.err_est);
    CHECK(cigf_equilibrium_series(exponential(1.0), {1, 1}).value == Approx(0.5).epsilon(1e-6));
}
