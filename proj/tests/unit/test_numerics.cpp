#include <doctest.h>

#include <cmath>

#include "cigf/errors.hpp"
#include "cigf/numerics.hpp"

using namespace cigf;
using doctest::Approx;

TEST_CASE("special functions")
{
    CHECK(beta(2.0, 3.0) == Approx(1.0 / 12.0).epsilon(1e-14));
    CHECK(incomplete_beta(0.3, 2.0, 3.0) == Approx(0.029025).epsilon(1e-13));
    CHECK(upper_incomplete_gamma(2.5, 1.5) == Approx(0.930519442786792390867).epsilon(1e-13));
    CHECK(upper_incomplete_gamma(1.0, 3.0) == Approx(std::exp(-3.0)).epsilon(1e-14));
    CHECK(gen_binomial(0.5, 2) == Approx(-0.125));
    CHECK(gen_binomial(3.0, 4) == 0.0);
    CHECK(binomial(10, 3) == 120.0);
    CHECK(binomial_terms(3.0).value() == 4);
    CHECK_FALSE(binomial_terms(0.5).has_value());
}

TEST_CASE("integrate_1d handles endpoint singularities and infinite ranges")
{
    QuadSpec s;
    CHECK(integrate_1d([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, s).value == Approx(2.0).epsilon(1e-10));
    CHECK(integrate_1d([](double x) { return std::exp(-x); }, 0.0, kInf, s).value == Approx(1.0).epsilon(1e-10));
    CHECK(integrate_1d([](double x) { return std::exp(-x * x); }, -kInf, kInf, s).value ==
          Approx(std::sqrt(M_PI)).epsilon(1e-10));
    // gap form: (1-x)^-0.5 evaluated from the distance to the upper limit
    GapIntegrand g = [](double, double, double hi) { return 1.0 / std::sqrt(hi); };
    CHECK(integrate_1d(g, 0.0, 1.0, s).value == Approx(2.0).epsilon(1e-10));
}

TEST_CASE("integrate_2d over rectangle and simplex")
{
    QuadSpec s;
    auto sq = Region2D::rectangle(0, 1, 0, 2);
    CHECK(integrate_2d([](double x, double y) { return x * y; }, sq, s).value == Approx(1.0).epsilon(1e-12));
    auto tri = Region2D::simplex(0, 1, 0, 1);
    CHECK(tri.area() == Approx(0.5));
    CHECK(integrate_2d([](double, double) { return 1.0; }, tri, s).value == Approx(0.5).epsilon(1e-12));
    CHECK(integrate_2d([](double x, double y) { return x * y; }, tri, s).value == Approx(1.0 / 24.0).epsilon(1e-12));
}

TEST_CASE("series summation")
{
    QuadSpec s;
    auto ln2 = alternating_series([](std::size_t n) { return (n % 2 ? -1.0 : 1.0) / double(n + 1); }, s);
    CHECK(ln2.value == Approx(std::log(2.0)).epsilon(1e-4));
    auto exact = alternating_series([](std::size_t n) { return gen_binomial(3.0, long(n)); }, s, std::size_t{4});
    CHECK(exact.value == 8.0);
    CHECK_THROWS_AS(alternating_series([](std::size_t) { return 1.0; }, s), AccuracyError);
}

TEST_CASE("differentiation")
{
    auto f = [](double x) { return std::sin(x); };
    CHECK(richardson_diff(f, 0.3, 1, 1e-2) == Approx(std::cos(0.3)).epsilon(1e-10));
    CHECK(richardson_diff(f, 0.3, 2, 1e-2) == Approx(-std::sin(0.3)).epsilon(1e-8));
    // right-sided Caputo derivative of exp(-t) of any order is exp(-t)
    FracDiffSpec fd;
    fd.order = 0.5;
    auto g = [](double t) { return std::exp(-t); };
    CHECK(caputo_deriv(g, 1.0, fd, {}).value == Approx(0.36787944117144232).epsilon(1e-6));
    fd.order = 1.5;
    CHECK(caputo_deriv(g, 1.0, fd, {}).value == Approx(0.36787944117144232).epsilon(1e-6));
}

TEST_CASE("QuadSpec validation")
{
    QuadSpec s;
    s.rel_tol = -1.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
}
