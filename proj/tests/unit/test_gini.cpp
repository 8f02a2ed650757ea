#include <doctest.h>

#include <cmath>

#include "cigf/errors.hpp"
#include "cigf/gini.hpp"

using namespace cigf;
using doctest::Approx;

TEST_CASE("q-Gini values")
{
    auto id = DistortionPair::identity();
    CHECK(q_gini(exponential(1.0), id).value == Approx(0.5).epsilon(1e-10));
    CHECK(q_gini(uniform(0.0, 1.0), id).value == Approx(1.0 / 6.0).epsilon(1e-10));
    CHECK(q_gini(bernoulli(0.3), DistortionPair::powers(2, 1)).value == Approx(0.147).epsilon(1e-12));
    CHECK(q_gini(degenerate(2.0), id).value == 0.0);
    CHECK(q_gini(power(2.0), DistortionPair::powers(0.5, 2)).value ==
          Approx(cigf::cigf(power(2.0), {0.5, 2}).value).epsilon(1e-10));
}

TEST_CASE("distortions")
{
    CHECK(Distortion::power(0.0)(0.0) == 0.0);
    CHECK(Distortion::power(0.0)(1e-9) == 1.0);
    auto sq = Distortion::callback([](double u) { return u * u; }, "sq");
    CHECK(sq(0.5) == 0.25);
    CHECK_THROWS_AS(Distortion::callback([](double u) { return 1.0 - u; }), DomainError);
}

TEST_CASE("variability axioms")
{
    for (const auto& x : {uniform(0.0, 1.0), exponential(1.0), laplace(1.0), bernoulli(0.3)}) {
        auto r = variability_axioms_check(x, x, DistortionPair::powers(2.0, 0.5));
        CHECK_MESSAGE(r.all_pass(), x.label());
    }
    auto r = variability_axioms_check(exponential(2.0), exponential(1.0), DistortionPair::identity());
    CHECK(r.all_pass());
}

TEST_CASE("dispersive order")
{
    CHECK(dispersive_check(exponential(2.0), exponential(1.0)) == Tri::holds);
    CHECK(dispersive_check(exponential(1.0), exponential(2.0)) == Tri::fails);
    CHECK(dispersive_check(power(2.0), power(1.0)) == Tri::fails);
    CHECK(dispersive_check(uniform(0.0, 1.0), uniform(0.0, 2.0)) == Tri::holds);
}

TEST_CASE("weighted q-Gini")
{
    auto u = uniform(0.0, 1.0);
    auto q = DistortionPair::powers(2, 1);
    CHECK(weighted_q_gini(power(2.0), q, u).value == Approx(q_gini(power(2.0), q).value).epsilon(1e-12));
    CHECK(weighted_q_gini(u, DistortionPair::identity(), degenerate(0.3)).value == Approx(0.21));
    auto e = exponential(1.0);
    MonteCarloConfig mc;
    mc.n_trials = 200000;
    auto m = mean_value_repr(e, e, mc);
    CHECK(std::fabs(m.value - weighted_q_gini(e, DistortionPair::identity(), e).value) <= m.err_est);
}

TEST_CASE("ordering of reliabilities")
{
    auto r = rkn_comparison(exponential(2.0), exponential(1.0), uniform(0.0, 1.0), 5);
    CHECK(r.checks.size() == 6);
    CHECK(r.all_pass());
    auto w = weighted_ordering_check(exponential(2.0), exponential(1.0), uniform(0.0, 1.0), DistortionPair::identity());
    CHECK(w.all_pass());
    auto p = rkn_comparison(power(2.0), power(1.0), uniform(0.0, 1.0), 5);
    CHECK_FALSE(p.checks.front().applicable);
}
