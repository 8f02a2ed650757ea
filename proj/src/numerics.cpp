#include "cigf/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "cigf/errors.hpp"

namespace cigf {

void QuadSpec::validate() const
{
    if (!(abs_tol > 0.0)) throw DomainError("QuadSpec.abs_tol must be > 0");
    if (!(rel_tol > 0.0)) throw DomainError("QuadSpec.rel_tol must be > 0");
    if (max_subdiv < 1) throw DomainError("QuadSpec.max_subdiv must be >= 1");
    if (!(tail_mass > 0.0 && tail_mass < 1.0)) throw DomainError("QuadSpec.tail_mass must lie in (0,1)");
    if (series_terms_max < 1) throw DomainError("QuadSpec.series_terms_max must be >= 1");
    if (!(series_tail_tol > 0.0)) throw DomainError("QuadSpec.series_tail_tol must be > 0");
}

int FracDiffSpec::integer_order() const
{
    return static_cast<int>(std::floor(order)) + 1;
}

// ---------------------------------------------------------------------------
// Special functions

double log_gamma(double x)
{
    if (!(x > 0.0)) throw DomainError("log_gamma: argument must be > 0, got " + std::to_string(x));
    return boost::math::lgamma(x);
}

double beta(double x, double y)
{
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError("beta: arguments must be > 0");
    return boost::math::beta(x, y);
}

double incomplete_beta(double p, double x, double y)
{
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("incomplete_beta: p must lie in [0,1]");
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError("incomplete_beta: shape arguments must be > 0");
    if (p == 0.0) return 0.0;
    // Boost's three-argument beta is the non-normalized incomplete integral.
    return boost::math::beta(x, y, p);
}

namespace {

// Continued fraction for Gamma(a, x) e^x x^-a, valid for x > a + 1 (modified Lentz).
double upper_gamma_cf(double a, double x)
{
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return h;
}

}  // namespace

double log_upper_incomplete_gamma(double a, double x)
{
    if (!(a > 0.0)) throw DomainError("upper_incomplete_gamma: a must be > 0");
    if (!(x >= 0.0)) throw DomainError("upper_incomplete_gamma: x must be >= 0");
    if (x == 0.0) return log_gamma(a);
    const double q = boost::math::gamma_q(a, x);
    if (q > 0.0 && std::isfinite(q)) return log_gamma(a) + std::log(q);
    // Far tail: Q underflows, use the continued fraction in log space.
    return -x + a * std::log(x) + std::log(upper_gamma_cf(a, x));
}

double upper_incomplete_gamma(double a, double x)
{
    return std::exp(log_upper_incomplete_gamma(a, x));
}

double gen_binomial(double a, long n)
{
    if (n < 0) throw DomainError("gen_binomial: n must be >= 0");
    double r = 1.0;
    for (long k = 0; k < n; ++k) {
        r *= (a - static_cast<double>(k)) / static_cast<double>(k + 1);
        if (r == 0.0) break;
    }
    return r;
}

std::optional<std::size_t> binomial_terms(double a)
{
    if (a >= 0.0 && a == std::floor(a) && a < 1e9) return static_cast<std::size_t>(a) + 1;
    return std::nullopt;
}

double binomial(int n, int k)
{
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r < 9e15 ? std::round(r) : r;
}

// ---------------------------------------------------------------------------
// Series

SeriesResult alternating_series(const std::function<double(std::size_t)>& term, const QuadSpec& spec,
                                std::optional<std::size_t> exact_terms)
{
    // Neumaier-compensated running sum.
    double sum = 0.0;
    double comp = 0.0;
    auto add = [&](double t) {
        const double s = sum + t;
        comp += std::fabs(sum) >= std::fabs(t) ? (sum - s) + t : (t - s) + sum;
        sum = s;
    };

    if (exact_terms) {
        for (std::size_t i = 0; i < *exact_terms; ++i) add(term(i));
        return {sum + comp, 0.0, *exact_terms};
    }

    const auto budget = static_cast<std::size_t>(spec.series_terms_max);
    int small_run = 0;
    double half_mag = 0.0;
    double last = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < budget; ++i) {
        const double t = term(i);
        if (!std::isfinite(t)) {
            throw AccuracyError("alternating_series: non-finite term at index " + std::to_string(i), sum + comp,
                                kInf);
        }
        add(t);
        prev = last;
        last = t;
        if (i == budget / 2) half_mag = std::fabs(t);
        if (std::fabs(t) <= spec.series_tail_tol * std::max(1.0, std::fabs(sum + comp))) {
            if (++small_run >= 2) {
                const double next = term(i + 1);
                return {sum + comp, std::fabs(next), i + 1};
            }
        } else {
            small_run = 0;
        }
    }

    const double mag = std::fabs(last);
    if (!(mag < half_mag) || mag == 0.0) {
        throw AccuracyError("alternating_series: terms do not decay within series_terms_max", sum + comp, mag);
    }
    double tail = mag;
    if (std::signbit(last) == std::signbit(prev)) {
        // Same-sign tail: assume |t_i| ~ C i^-p and integrate the remainder.
        const double p = std::log(half_mag / mag) / std::log(2.0);
        if (!(p > 1.0)) {
            throw AccuracyError("alternating_series: tail decays too slowly to bound", sum + comp, kInf);
        }
        // The integral estimate is accurate to the error in p, so it is added
        // to the sum and only a fraction of it is reported.
        tail = mag * static_cast<double>(budget) / (p - 1.0);
        const double signed_tail = std::signbit(last) ? -tail : tail;
        return {sum + comp + signed_tail, 0.01 * tail + mag, budget};
    }
    return {sum + comp, tail, budget};
}

// ---------------------------------------------------------------------------
// Differentiation

double central_diff(const std::function<double(double)>& g, double at, int order, double step)
{
    if (!(step > 0.0)) throw DomainError("central_diff: step must be > 0");
    const double h = step;
    switch (order) {
    case 1:
        return (g(at + h) - g(at - h)) / (2.0 * h);
    case 2:
        return (g(at + h) - 2.0 * g(at) + g(at - h)) / (h * h);
    case 3:
        return (g(at + 2.0 * h) - 2.0 * g(at + h) + 2.0 * g(at - h) - g(at - 2.0 * h)) / (2.0 * h * h * h);
    case 4:
        return (g(at + 2.0 * h) - 4.0 * g(at + h) + 6.0 * g(at) - 4.0 * g(at - h) + g(at - 2.0 * h)) /
               (h * h * h * h);
    default:
        throw DomainError("central_diff: order must be in 1..4");
    }
}

double richardson_diff(const std::function<double(double)>& g, double at, int order, double step)
{
    const double coarse = central_diff(g, at, order, step);
    const double fine = central_diff(g, at, order, 0.5 * step);
    return (4.0 * fine - coarse) / 3.0;
}

double default_diff_step(int order)
{
    switch (order) {
    case 1: return 1e-3;
    case 2: return 1e-2;
    case 3: return 2e-2;
    default: return 5e-2;
    }
}

QuadResult caputo_deriv(const std::function<double(double)>& g, double at, const FracDiffSpec& fd,
                        const QuadSpec& quad)
{
    const double nu = fd.order;
    if (!(nu > 0.0)) throw DomainError("caputo_deriv: order must be > 0");
    if (nu == std::floor(nu)) throw DomainError("caputo_deriv: order must be non-integer");
    const int n = fd.integer_order();
    if (n > 4) throw DomainError("caputo_deriv: orders above 4 are not supported");
    const double kappa = nu + 1.0 - n;  // kernel exponent, in (0,1)
    const double h = fd.inner_step > 0.0 ? fd.inner_step : default_diff_step(n);

    auto deriv = [&](double t) { return richardson_diff(g, t, n, h * std::max(1.0, std::fabs(t))); };
    auto kernel_term = [&](double t) { return deriv(t) * std::pow(t - at, -kappa); };

    // Upper limit: explicit, or the first at + 2^k where the integrand
    // envelope |D(t)| (t-at)^(1-kappa) stays below abs_tol twice in a row.
    double cutoff = fd.upper_cutoff;
    double tail_err = 0.0;
    if (!std::isfinite(cutoff)) {
        int quiet = 0;
        double t = at;
        for (int k = 0; k <= 60; ++k) {
            t = at + std::ldexp(1.0, k);
            const double env = std::fabs(kernel_term(t)) * (t - at);
            if (env <= 0.1 * quad.abs_tol) {
                if (++quiet >= 2) {
                    tail_err = env;
                    break;
                }
            } else {
                quiet = 0;
            }
            if (k == 60) {
                throw AccuracyError("caputo_deriv: integrand does not decay; set upper_cutoff explicitly", 0.0,
                                    kInf);
            }
        }
        cutoff = t;
    }
    if (!(cutoff > at)) throw DomainError("caputo_deriv: upper_cutoff must exceed the evaluation point");

    // First panel [at, at+w]: subtract the kernel singularity analytically,
    //   int D(t)(t-at)^-k = D(at) w^(1-k)/(1-k) + int (D(t)-D(at)) (t-at)^-k.
    const double w = std::min(1.0, cutoff - at);
    const double d0 = deriv(at);
    constexpr double flat = 1e-10;
    const GapIntegrand near = [&](double, double s, double) {
        if (s < flat) return 0.0;
        return (deriv(at + s) - d0) * std::pow(s, -kappa);
    };
    QuadResult acc = integrate_1d(near, 0.0, w, quad);
    acc.value += d0 * std::pow(w, 1.0 - kappa) / (1.0 - kappa);

    // Remaining range in geometrically growing panels.
    double a = at + w;
    double width = w;
    while (a < cutoff) {
        const double b = std::min(cutoff, a + width);
        const QuadResult part = integrate_1d(Integrand(kernel_term), a, b, quad);
        acc.value += part.value;
        acc.err_est += part.err_est;
        a = b;
        width *= 2.0;
    }
    acc.err_est += tail_err;

    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double scale = sign / std::tgamma(static_cast<double>(n) - nu);
    return {scale * acc.value, std::fabs(scale) * acc.err_est};
}

}  // namespace cigf
