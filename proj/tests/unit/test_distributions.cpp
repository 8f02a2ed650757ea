#include <doctest.h>

#include <cmath>

#include "cigf/cli.hpp"
#include "cigf/distribution.hpp"
#include "cigf/errors.hpp"

using namespace cigf;
using doctest::Approx;

TEST_CASE("families: cdf, quantile and means")
{
    auto e = exponential(2.0);
    CHECK(e.cdf(1.0) == Approx(1.0 - std::exp(-2.0)));
    CHECK(e.quantile(e.cdf(0.7)) == Approx(0.7).epsilon(1e-12));
    CHECK(e.mean().value() == Approx(0.5));
    auto p = power(2.0);
    CHECK(p.cdf(0.5) == Approx(0.25));
    CHECK(p.quantile(0.25) == Approx(0.5));
    auto l = laplace(1.0);
    CHECK(l.cdf(0.0) == Approx(0.5));
    CHECK(l.quantile(0.5) == Approx(0.0));
    auto er = erlang2(1.0);
    CHECK(er.sf(1.0) == Approx(2.0 * std::exp(-1.0)));
    CHECK(er.quantile(er.cdf(2.3)) == Approx(2.3).epsilon(1e-10));
    auto b = bernoulli(0.3);
    CHECK(b.is_discrete());
    CHECK(b.cdf(0.5) == Approx(0.7));
    CHECK(degenerate(2.0).is_degenerate());
}

TEST_CASE("bad parameters are domain errors")
{
    CHECK_THROWS_AS(exponential(-1.0), DomainError);
    CHECK_THROWS_AS(uniform(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(bernoulli(1.5), DomainError);
}

TEST_CASE("empirical law from samples")
{
    auto e = from_samples({2.0, 1.0, 2.0, 4.0});
    REQUIRE(e.points.size() == 3);
    CHECK(e.probs[1] == Approx(0.5));
    auto d = discrete(e);
    CHECK(d.cdf(2.0) == Approx(0.75));
    CHECK(d.mean().value() == Approx(2.25));
}

TEST_CASE("transforms")
{
    auto u = uniform(0.0, 1.0);
    auto a = affine(u, 3.0, 5.0);
    CHECK(a.support().l == Approx(5.0));
    CHECK(a.support().r == Approx(8.0));
    CHECK(a.cdf(6.5) == Approx(0.5));
    auto m = prop_hazard(exponential(1.0), 3.0);
    CHECK(m.sf(1.0) == Approx(std::exp(-3.0)));
    auto mx = prop_rev_hazard(u, 2.0);
    CHECK(mx.cdf(0.5) == Approx(0.25));
    auto eq = equilibrium(exponential(1.0));
    CHECK(eq.cdf(1.0) == Approx(1.0 - std::exp(-1.0)).epsilon(1e-8));
    CHECK(odds(u, 0.25) == Approx(3.0));
}

TEST_CASE("spec strings")
{
    CHECK(parse_distribution("exp:1.5").family() == Family::exponential);
    CHECK(parse_distribution("unif:0:2").support().r == 2.0);
    CHECK(parse_distribution("bernoulli:0.3").family() == Family::bernoulli);
    CHECK(parse_distribution("degen:2").is_degenerate());
    auto emp = parse_distribution(std::string("emp:@") + CIGF_TEST_DATA + "/samples.txt");
    CHECK(emp.mean().value() == Approx(2.25));
    CHECK_THROWS_AS(parse_distribution("gamma:2"), ParseError);
    CHECK_THROWS_AS(parse_distribution("unif:0"), ParseError);
    CHECK_THROWS_AS(parse_distribution("exp:x"), ParseError);
    CHECK_THROWS_AS(parse_distribution("exp:-1"), DomainError);
    CHECK(parse_distortion("pow:2:0.5").as_params()->alpha == 2.0);
    CHECK_THROWS_AS(parse_distortion("pow:2"), ParseError);
}
