#include <doctest.h>

#include <cmath>

#include "cigf/bivariate.hpp"
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

TEST_CASE("closed forms against quadrature")
{
    auto tri = BivariateDistribution::triangle_uniform();
    auto fgm = BivariateDistribution::fgm2x2(0.1);
    for (double a : {0.5, 2.0}) {
        for (double b : {0.5, 1.0}) {
            CHECK(cigf2(tri, {a, b}, {}, quad()).value == Approx(*cigf2_closed_form(tri, {a, b})).epsilon(1e-9));
            CHECK(cigf2(fgm, {a, b}, {}, quad()).value == Approx(*cigf2_closed_form(fgm, {a, b})).epsilon(1e-9));
        }
    }
    CHECK(cigf2(tri, {-0.5, 0.5}, {}, quad()).value == Approx(1.1107207345395916).epsilon(1e-9));
}

TEST_CASE("sum density")
{
    auto sd = BivariateDistribution::sum_density();
    CHECK(cigf2(sd, {1, 1}).value == Approx(0.021527777777777771).epsilon(1e-10));
    CHECK(cigf2(sd, {2, 1}).value == Approx(0.0043849206349206365).epsilon(1e-10));
    CHECK(sd.marginal_x().mean().value() == Approx(7.0 / 12.0));
    CHECK(in_domain2(sd, {-0.7, 1.0}) == DomainStatus::outside);
}

TEST_CASE("independent coupling factorizes")
{
    auto [joint, prod] = cigf2_product_check(exponential(1.0), uniform(0.0, 1.0), {0.5, 2.0});
    CHECK(joint.value == Approx(prod.value).epsilon(1e-9));
    CHECK(cigf2_product_check(degenerate(1.0), uniform(0.0, 1.0), {1, 1}).first.value == 0.0);
}

TEST_CASE("joint entropies")
{
    auto fgm = BivariateDistribution::fgm2x2(0.1);
    CHECK(joint_cre(fgm).value == Approx(-0.35 * std::log(0.35)).epsilon(1e-10));
    auto tri = BivariateDistribution::triangle_uniform();
    CHECK(joint_cre(tri).value == Approx(7.0 / 72.0).epsilon(1e-9));
    CHECK(joint_ce(tri, {}, JointRegion::s_region).value == Approx(0.12279329050889345).epsilon(1e-9));
    CHECK_THROWS_AS(joint_ce(BivariateDistribution::product(exponential(1.0), exponential(1.0))), DomainError);
}

TEST_CASE("independence identities")
{
    auto uu = BivariateDistribution::product(uniform(0.0, 1.0), uniform(0.0, 1.0));
    for (EntropyKind k : {EntropyKind::ce, EntropyKind::cre}) {
        auto id = independence_identity(uu, k);
        CHECK(id.joint == Approx(id.from_marginals).epsilon(1e-9));
    }
    auto id = independence_identity(BivariateDistribution::fgm2x2(0.1), EntropyKind::cre);
    CHECK(std::fabs(id.joint - id.from_marginals) > 0.01);
}

TEST_CASE("recovery from derivatives")
{
    auto tri = BivariateDistribution::triangle_uniform();
    auto [d, r] = joint_recovery_check(tri, EntropyKind::cre, 1.0);
    CHECK(r.value == Approx(d.value).epsilon(1e-7));
    auto [d2, r2] = joint_recovery_check(BivariateDistribution::fgm2x2(0.1), EntropyKind::ce, 0.5);
    CHECK(r2.value == Approx(d2.value).epsilon(1e-6));
}

TEST_CASE("odds")
{
    auto tri = BivariateDistribution::triangle_uniform();
    CHECK(odds2(tri, 0.0).value == Approx(0.5));
    CHECK(odds2(BivariateDistribution::fgm2x2(0.2), 0.7).value == Approx(1.0));
    CHECK_THROWS_AS(odds2(tri, 1.0), DomainError);
}
