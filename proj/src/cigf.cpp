#include "cigf/cigf.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cigf/entropy.hpp"
#include "cigf/errors.hpp"
#include "cigf/functional.hpp"
#include "cigf/monte_carlo.hpp"
#include "detail.hpp"

namespace cigf {

using detail::fmt;

const char* method_name(Method m)
{
    switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::quadrature: return "quadrature";
    case Method::series: return "series";
    case Method::monte_carlo: return "monte_carlo";
    }
    return "?";
}

const char* domain_status_name(DomainStatus s)
{
    switch (s) {
    case DomainStatus::inside: return "inside";
    case DomainStatus::outside: return "outside";
    case DomainStatus::undetermined: return "undetermined";
    }
    return "?";
}

namespace {

// Open lower bounds (alpha > a0, beta > b0) describing the domain of the
// families whose domain is a quadrant.
struct Quadrant {
    double a0;
    double b0;
};

std::optional<Quadrant> quadrant_of(const FamilyTag& t)
{
    switch (t.family) {
    case Family::uniform: return Quadrant{-1.0, -1.0};
    case Family::power: return Quadrant{-1.0 / t.params[0], -1.0};
    case Family::exponential: return Quadrant{-1.0, 0.0};
    case Family::laplace: return Quadrant{0.0, 0.0};
    // F ~ (lambda x)^2 / 2 near 0 and F̄ decays exponentially.
    case Family::erlang2: return Quadrant{-0.5, 0.0};
    default: return std::nullopt;
    }
}

bool is_nonneg_integer(double a)
{
    return a >= 0.0 && a == std::floor(a);
}

std::string pair_text(ParamPair p)
{
    return "(alpha=" + fmt(p.alpha) + ", beta=" + fmt(p.beta) + ")";
}

void require_finite(ParamPair p)
{
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta)) throw DomainError("exponents must be finite");
}

[[noreturn]] void throw_outside(const Distribution& x, ParamPair p)
{
    const auto q = quadrant_of(x.tag());
    std::string why;
    if (q && !(p.alpha > q->a0)) why = "alpha = " + fmt(p.alpha) + " must exceed " + fmt(q->a0);
    else if (q) why = "beta = " + fmt(p.beta) + " must exceed " + fmt(q->b0);
    throw DomainError("G_X" + pair_text(p) + " is infinite for " + x.label() + ": " + why);
}

CdfIntegrand power_integrand(ParamPair p)
{
    return [p](double f, double fb) {
        const double a = p.alpha == 0.0 ? 1.0 : std::pow(f, p.alpha);
        const double b = p.beta == 0.0 ? 1.0 : std::pow(fb, p.beta);
        return a * b;
    };
}

MeasureReport quadrature_cigf(const Distribution& x, ParamPair p, const QuadSpec& spec, DomainStatus status)
{
    const CdfIntegrand phi = power_integrand(p);
    if (status != DomainStatus::inside) {
        const Endpoint e = probe_divergence(x, phi);
        if (e == Endpoint::lower) {
            throw DomainError("G_X" + pair_text(p) + " diverges at the lower end of " + x.label() + " (alpha = " +
                              fmt(p.alpha) + ")");
        }
        if (e == Endpoint::upper) {
            throw DomainError("G_X" + pair_text(p) + " diverges at the upper end of " + x.label() + " (beta = " +
                              fmt(p.beta) + ")");
        }
    }
    const FunctionalResult r = cdf_functional(x, phi, spec);
    MeasureReport rep{r.q.value, r.q.err_est, r.form == FunctionalForm::sum ? Method::closed_form : Method::quadrature,
                      {}};
    rep.meta["form"] = form_name(r.form);
    return rep;
}

}  // namespace

DomainStatus in_domain(const Distribution& x, ParamPair p)
{
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta)) return DomainStatus::outside;
    if (x.is_discrete()) return DomainStatus::inside;  // finite sum
    const auto q = quadrant_of(x.tag());
    if (!q) return DomainStatus::undetermined;
    return (p.alpha > q->a0 && p.beta > q->b0) ? DomainStatus::inside : DomainStatus::outside;
}

std::optional<double> cigf_closed_form(const Distribution& x, ParamPair p)
{
    const FamilyTag t = x.tag();
    const double a = p.alpha;
    const double b = p.beta;
    switch (t.family) {
    case Family::degenerate: return 0.0;
    case Family::bernoulli: return std::pow(1.0 - t.params[0], a) * std::pow(t.params[0], b);
    case Family::uniform: return (t.params[1] - t.params[0]) * beta(a + 1.0, b + 1.0);
    case Family::power: return beta(a + 1.0 / t.params[0], b + 1.0) / t.params[0];
    case Family::exponential: return beta(a + 1.0, b) / t.params[0];
    case Family::laplace:
        // Both halves written as incomplete beta integrals at 1/2.
        return t.params[0] * (incomplete_beta(0.5, a, b + 1.0) + incomplete_beta(0.5, b, a + 1.0));
    default: return std::nullopt;
    }
}

MeasureReport cigf(const Distribution& x, ParamPair p, const QuadSpec& spec, const CigfOptions& opts)
{
    require_finite(p);
    spec.validate();
    MeasureReport rep;
    const DomainStatus status = in_domain(x, p);
    if (status == DomainStatus::outside) throw_outside(x, p);

    using Path = CigfOptions::Path;
    const FamilyTag tag = x.tag();
    const bool series_ok = tag.family == Family::erlang2 && p.beta > 0.0;
    Path path = opts.path;
    if (path == Path::automatic) {
        if (cigf_closed_form(x, p)) {
            path = Path::closed_form;
        } else if (series_ok && is_nonneg_integer(p.alpha)) {
            path = Path::series;
        } else {
            path = Path::quadrature;
        }
    }

    switch (path) {
    case Path::closed_form: {
        const auto v = cigf_closed_form(x, p);
        if (!v) throw DomainError("no closed form of G_X for " + x.label());
        rep = {*v, 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(*v), Method::closed_form, {}};
        break;
    }
    case Path::series:
        if (!series_ok) throw DomainError("series path is only available for erlang2 with beta > 0");
        rep = cigf_erlang_series(tag.params[0], p, spec);
        break;
    default:
        rep = quadrature_cigf(x, p, spec, status);
        break;
    }
    rep.meta["distribution"] = x.label();
    rep.meta["domain"] = domain_status_name(status);

    if (opts.cross_check && rep.method != Method::quadrature && !x.is_discrete()) {
        const MeasureReport q = quadrature_cigf(x, p, spec, status);
        rep.meta["quadrature_value"] = fmt(q.value);
        rep.meta["quadrature_err_est"] = fmt(q.err_est);
        rep.meta["cross_check_abs_diff"] = fmt(std::fabs(q.value - rep.value));
    }
    return rep;
}

MeasureReport cigf_erlang_series(double lambda, ParamPair p, const QuadSpec& spec)
{
    if (!(lambda > 0.0)) throw DomainError("cigf_erlang_series: lambda must be > 0");
    require_finite(p);
    if (!(p.beta > 0.0)) throw DomainError("cigf_erlang_series: beta = " + fmt(p.beta) + " must be > 0");
    if (!(p.alpha > -0.5)) throw DomainError("cigf_erlang_series: alpha = " + fmt(p.alpha) + " must exceed -1/2");
    const auto term = [&](std::size_t n) {
        const double c = gen_binomial(p.alpha, static_cast<long>(n));
        if (c == 0.0) return 0.0;
        const double a = static_cast<double>(n) + p.beta;
        const double log_mag = log_upper_incomplete_gamma(a + 1.0, a) + a - (a + 1.0) * std::log(a);
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        return sign * c * std::exp(log_mag) / lambda;
    };
    const SeriesResult s = alternating_series(term, spec, binomial_terms(p.alpha));
    MeasureReport rep{s.value, s.err_est, Method::series, {}};
    rep.meta["terms"] = std::to_string(s.n_used);
    return rep;
}

MeasureReport h_measure(const Distribution& x, double alpha, const QuadSpec& spec)
{
    MeasureReport r = cigf(x, {alpha, 0.0}, spec);
    r.meta["measure"] = "H";
    return r;
}

MeasureReport k_measure(const Distribution& x, double beta_, const QuadSpec& spec)
{
    MeasureReport r = cigf(x, {0.0, beta_}, spec);
    r.meta["measure"] = "K";
    return r;
}

MeasureReport cigf_odds(const Distribution& x, double beta_, const QuadSpec& spec)
{
    const ParamPair p{-beta_, beta_};
    if (in_domain(x, p) == DomainStatus::outside) {
        throw DomainError("odds integral with beta = " + fmt(beta_) + " is infinite for " + x.label() +
                          " (requires (-beta, beta) in the finiteness domain)");
    }
    MeasureReport r = cigf(x, p, spec);
    r.meta["measure"] = "odds";
    return r;
}

std::pair<MeasureReport, MeasureReport> cigf_affine_check(const Distribution& x, double gamma, double delta,
                                                          ParamPair p, const QuadSpec& spec)
{
    const Distribution y = affine(x, gamma, delta);
    MeasureReport lhs = cigf(y, p, spec);
    MeasureReport rhs = cigf(x, gamma > 0.0 ? p : p.swapped(), spec);
    const double g = std::fabs(gamma);
    rhs.value *= g;
    rhs.err_est *= g;
    rhs.meta["scaled_by"] = fmt(g);
    if (gamma < 0.0) rhs.meta["exponents"] = "swapped";
    return {lhs, rhs};
}

MeasureReport cigf_beta_representation(const Distribution& x, ParamPair p, std::int64_t n_mc, std::uint64_t seed)
{
    require_finite(p);
    if (!x.has_pdf() || x.is_discrete()) throw DomainError("beta representation requires a density: " + x.label());
    if (!(p.alpha > -1.0) || !(p.beta > -1.0)) throw DomainError("beta representation requires alpha, beta > -1");
    const double b = beta(p.alpha + 1.0, p.beta + 1.0);
    MonteCarloConfig mc;
    mc.n_trials = n_mc;
    mc.seed = seed;
    const McAccumulator acc = run_monte_carlo(mc, [&](std::mt19937_64& rng) {
        std::gamma_distribution<double> ga(p.alpha + 1.0, 1.0);
        std::gamma_distribution<double> gb(p.beta + 1.0, 1.0);
        const double g1 = ga(rng);
        const double g2 = gb(rng);
        // u and 1-u formed separately, so neither end loses precision.
        const double u = g1 / (g1 + g2);
        const double v = g2 / (g1 + g2);
        return 1.0 / x.quantile_density(u, v);
    });
    MeasureReport rep{b * acc.mean(), 3.0 * b * acc.std_error(), Method::monte_carlo, {}};
    rep.meta["n_mc"] = std::to_string(n_mc);
    rep.meta["seed"] = std::to_string(seed);
    rep.meta["err_est"] = "3 sigma";
    return rep;
}

MeasureReport cigf_equilibrium_series(const Distribution& x, ParamPair p, const QuadSpec& spec)
{
    require_finite(p);
    const auto mu = x.mean();
    if (!mu || !(*mu > 0.0) || !std::isfinite(*mu)) throw DomainError("equilibrium series requires 0 < E[X] < inf");
    if (in_domain(x, p) == DomainStatus::outside) throw_outside(x, p);
    const Distribution xe = equilibrium(x, spec);
    double err = 0.0;
    const auto term = [&](std::size_t n) {
        const double c = gen_binomial(p.alpha, static_cast<long>(n));
        if (c == 0.0) return 0.0;
        const double nu = static_cast<double>(n) + p.beta;
        const MeasureReport ig = golomb_ig(xe, nu, spec);
        const double scale = std::fabs(c) * std::pow(*mu, nu);
        err += scale * ig.err_est;
        return ((n % 2 == 0) ? 1.0 : -1.0) * c * std::pow(*mu, nu) * ig.value;
    };
    const SeriesResult s = alternating_series(term, spec, binomial_terms(p.alpha));
    MeasureReport rep{s.value, s.err_est + err, Method::series, {}};
    rep.meta["terms"] = std::to_string(s.n_used);
    rep.meta["equilibrium"] = xe.label();
    return rep;
}

}  // namespace cigf
