#include <doctest.h>

#include <cmath>

#include "cigf/entropy.hpp"
#include "cigf/errors.hpp"

using namespace cigf;
using doctest::Approx;

TEST_CASE("direct entropies")
{
    auto e = exponential(1.0);
    auto u = uniform(0.0, 1.0);
    CHECK(cre(e).value == Approx(1.0).epsilon(1e-9));
    CHECK(cre_n(e, 3).value == Approx(1.0).epsilon(1e-9));
    CHECK(cre_frac(e, 0.5).value == Approx(1.0).epsilon(1e-9));
    CHECK(cre(u).value == Approx(0.25).epsilon(1e-9));
    CHECK(ce(u).value == Approx(0.25).epsilon(1e-9));
    CHECK(ce_n(u, 2).value == Approx(0.125).epsilon(1e-9));
    CHECK(cre_frac(u, 1.5).value == Approx(std::pow(2.0, -2.5)).epsilon(1e-9));
    CHECK(ce_frac(u, 0.5).value == Approx(0.35355339059327376).epsilon(1e-9));
    CHECK(cre(erlang2(1.0)).value == Approx(1.4036526376768059).epsilon(1e-9));
    CHECK(cre_n(e, 0).value == Approx(1.0));
}

TEST_CASE("recovery from the CIGF")
{
    auto e = exponential(1.0);
    auto u = uniform(0.0, 1.0);
    CHECK(cre_from_cigf(e).value == Approx(1.0).epsilon(1e-6));
    CHECK(cre_n_from_cigf(e, 2).value == Approx(1.0).epsilon(1e-5));
    CHECK(ce_from_cigf(u).value == Approx(0.25).epsilon(1e-6));
    CHECK(ce_n_from_cigf(u, 2).value == Approx(0.125).epsilon(1e-5));
    CHECK(cre_frac_from_cigf(e, 0.5).value == Approx(1.0).epsilon(1e-4));
    FracDiffSpec fd;
    fd.order = 1.5;
    CHECK(cre_frac_from_cigf(u, 1.5, fd).value == Approx(std::pow(2.0, -2.5)).epsilon(1e-4));
    CHECK(marginal_recovery(u, EntropyKind::ce, 1.0).value == Approx(0.25).epsilon(1e-6));
    CHECK(marginal_recovery(e, EntropyKind::cre, 0.5).value == Approx(1.0).epsilon(1e-4));
}

TEST_CASE("CE of the exponential law diverges")
{
    CHECK_THROWS_AS(ce_from_cigf(exponential(1.0)), DomainError);
}

TEST_CASE("Golomb generating function")
{
    CHECK(golomb_ig(exponential(2.0), 2.0).value == Approx(1.0).epsilon(1e-9));
    CHECK(golomb_ig(uniform(0.0, 2.0), 3.0).value == Approx(0.25).epsilon(1e-9));
}
