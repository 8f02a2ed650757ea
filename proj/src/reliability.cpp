#include "cigf/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "cigf/errors.hpp"
#include "detail.hpp"

namespace cigf {

using detail::fmt;

void SystemSpec::validate() const
{
    if (n < 1) throw DomainError("SystemSpec: n must be >= 1, got " + std::to_string(n));
    if (k < 0 || k > n) throw DomainError("SystemSpec: k must lie in [0, n], got k=" + std::to_string(k));
}

Distribution max_order_statistic(const Distribution& x, int n)
{
    if (n < 1) throw DomainError("max_order_statistic: n must be >= 1");
    return prop_rev_hazard(x, n);
}

Distribution min_order_statistic(const Distribution& x, int n)
{
    if (n < 1) throw DomainError("min_order_statistic: n must be >= 1");
    return prop_hazard(x, n);
}

namespace {

MeasureReport order_series(const Distribution& x, int n, double outer, double inner, bool use_h,
                           const QuadSpec& spec, const char* name)
{
    if (n < 1) throw DomainError(std::string(name) + ": n must be >= 1");
    auto marginal = [&](double a) {
        try {
            return (use_h ? h_measure(x, a, spec) : k_measure(x, a, spec)).value;
        } catch (const DomainError& e) {
            throw DomainError(std::string(name) + ": " + (use_h ? "H" : "K") + "(" + fmt(a) + ") is not finite for " +
                              x.label() + " (" + e.what() + ")");
        }
    };
    const auto term = [&](std::size_t i) {
        const double c = gen_binomial(inner, static_cast<long>(i));
        if (c == 0.0) return 0.0;
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        return sign * c * marginal(n * (static_cast<double>(i) + outer));
    };
    SeriesResult s;
    try {
        s = alternating_series(term, spec, binomial_terms(inner));
    } catch (const AccuracyError& e) {
        throw AccuracyError(std::string(name) + ": series did not converge for " + x.label() +
                                "; (alpha, beta) is treated as outside the domain of the order statistic (" +
                                e.what() + ")",
                            e.best_estimate(), e.error_estimate());
    }
    MeasureReport rep{s.value, s.err_est, Method::series, {}};
    rep.meta["distribution"] = x.label();
    rep.meta["n"] = std::to_string(n);
    rep.meta["terms"] = std::to_string(s.n_used);
    return rep;
}

// P(Binomial(n, q) >= k) = I_q(k, n-k+1), evaluated on whichever of q,
// 1-q is small.
double at_least_k(int k, int n, double q, double one_minus_q)
{
    if (k <= 0) return 1.0;
    if (q <= 0.0) return 0.0;
    if (one_minus_q <= 0.0) return 1.0;
    if (q <= 0.5) return boost::math::ibeta(k, n - k + 1, q);
    return boost::math::ibetac(n - k + 1, k, one_minus_q);
}

}  // namespace

MeasureReport cigf_max_series(const Distribution& x, int n, ParamPair p, const QuadSpec& spec)
{
    return order_series(x, n, p.alpha, p.beta, true, spec, "cigf_max_series");
}

MeasureReport cigf_min_series(const Distribution& x, int n, ParamPair p, const QuadSpec& spec)
{
    return order_series(x, n, p.beta, p.alpha, false, spec, "cigf_min_series");
}

MeasureReport korn_mean(const Distribution& x, int k, int n, const QuadSpec& spec)
{
    if (n < 1 || k < 1 || k > n) {
        throw DomainError("korn_mean: requires 1 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
    const SupportInterval s = x.support();
    if (!std::isfinite(s.l)) {
        throw DomainError("korn_mean: support of " + x.label() + " is unbounded below; the CIGF sum gives "
                          "E[X_(k:n)] - l only for a finite l");
    }
    double value = s.l;
    double err = 0.0;
    Method method = Method::closed_form;
    for (int j = 0; j < k; ++j) {
        const MeasureReport g = cigf(x, {static_cast<double>(j), static_cast<double>(n - j)}, spec);
        const double c = binomial(n, j);
        value += c * g.value;
        err += c * g.err_est;
        if (g.method != Method::closed_form) method = g.method;
    }
    MeasureReport rep{value, err, method, {}};
    rep.meta["distribution"] = x.label();
    rep.meta["k"] = std::to_string(k);
    rep.meta["n"] = std::to_string(n);
    rep.meta["offset_l"] = fmt(s.l);
    return rep;
}

MeasureReport rkn_general(const SystemSpec& sys, const QuadSpec& spec)
{
    sys.validate();
    MeasureReport rep{1.0, 0.0, Method::closed_form, {}};
    rep.meta["strength"] = sys.strength.label();
    rep.meta["stress"] = sys.stress.label();
    rep.meta["k"] = std::to_string(sys.k);
    rep.meta["n"] = std::to_string(sys.n);
    if (sys.k == 0) return rep;

    const Distribution& x = sys.strength;
    auto survive = [&](double t) { return at_least_k(sys.k, sys.n, x.sf(t), x.cdf(t)); };

    if (const auto* atoms = sys.stress.atoms()) {
        double v = 0.0;
        for (const Atom& a : *atoms) v += a.p * survive(a.x);
        rep.value = v;
        rep.meta["form"] = "sum";
        return rep;
    }
    // Integrate over the stress quantile so that dF_T becomes du.
    const Distribution& t = sys.stress;
    const GapIntegrand f = [&](double u, double lo_gap, double hi_gap) {
        const double at = u <= 0.5 ? t.quantile(lo_gap) : t.quantile_upper(hi_gap);
        return survive(at);
    };
    const QuadResult q = integrate_1d(f, 0.0, 1.0, spec);
    rep.value = std::clamp(q.value, 0.0, 1.0);
    rep.err_est = q.err_est;
    rep.method = Method::quadrature;
    rep.meta["form"] = "quantile";
    return rep;
}

namespace {

void require_common_support(const Distribution& x, double l, double r, const char* name)
{
    if (!std::isfinite(l) || !std::isfinite(r) || !(l < r)) {
        throw DomainError(std::string(name) + ": stress support must be a finite interval l < r");
    }
    if (!x.support().same_as({l, r})) {
        const SupportInterval s = x.support();
        throw DomainError(std::string(name) + ": strength support (" + fmt(s.l) + ", " + fmt(s.r) +
                          ") differs from the stress support (" + fmt(l) + ", " + fmt(r) + ")");
    }
}

}  // namespace

MeasureReport rkn_uniform_stress(const Distribution& x, int k, int n, double l, double r, const QuadSpec& spec)
{
    if (n < 1 || k < 0 || k > n) {
        throw DomainError("rkn_uniform_stress: requires 0 <= k <= n, got k=" + std::to_string(k) +
                          " n=" + std::to_string(n));
    }
    require_common_support(x, l, r, "rkn_uniform_stress");
    MeasureReport rep{1.0, 0.0, Method::closed_form, {}};
    rep.meta["distribution"] = x.label();
    rep.meta["k"] = std::to_string(k);
    rep.meta["n"] = std::to_string(n);
    if (k == 0) return rep;
    double sum = 0.0;
    double err = 0.0;
    for (int j = k; j <= n; ++j) {
        const MeasureReport g = cigf(x, {static_cast<double>(n - j), static_cast<double>(j)}, spec);
        const double c = binomial(n, j);
        sum += c * g.value;
        err += c * g.err_est;
        if (g.method != Method::closed_form) rep.method = g.method;
    }
    rep.value = sum / (r - l);
    rep.err_est = err / (r - l);
    return rep;
}

std::vector<double> rkn_recurrence(const Distribution& x, int n, double l, double r, const QuadSpec& spec)
{
    if (n < 1) throw DomainError("rkn_recurrence: n must be >= 1");
    require_common_support(x, l, r, "rkn_recurrence");
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    out[0] = 1.0;
    for (int k = 0; k < n; ++k) {
        const double g = cigf(x, {static_cast<double>(n - k), static_cast<double>(k)}, spec).value;
        out[static_cast<std::size_t>(k) + 1] = out[static_cast<std::size_t>(k)] - binomial(n, k) * g / (r - l);
    }
    return out;
}

double rkn_power_closed(double theta, int k, int n)
{
    if (!(theta > 0.0) || !std::isfinite(theta)) throw DomainError("rkn_power_closed: theta must be finite and > 0");
    if (n < 0 || k < 0 || k > n) throw DomainError("rkn_power_closed: requires 0 <= k <= n");
    if (k == 0) return 1.0;
    const double c = 1.0 / theta;
    // Gamma(a)/Gamma(a+c) ratios avoid the cancellation of differenced log-gammas.
    return boost::math::tgamma_delta_ratio(static_cast<double>(n + 1), c) /
           boost::math::tgamma_delta_ratio(static_cast<double>(n - k + 1), c);
}

std::vector<MeasureReport> rkn_monte_carlo_profile(const Distribution& strength, const Distribution& stress, int n,
                                                   const MonteCarloConfig& mc)
{
    if (n < 1) throw DomainError("rkn_monte_carlo: n must be >= 1");
    const auto width = static_cast<std::size_t>(n) + 1;
    const auto acc = run_monte_carlo_multi(mc, width, [&](std::mt19937_64& rng, double* out) {
        const double t = stress.sample(rng);
        int exceed = 0;
        for (int i = 0; i < n; ++i) exceed += strength.sample(rng) > t ? 1 : 0;
        for (std::size_t k = 0; k < width; ++k) out[k] = static_cast<int>(k) <= exceed ? 1.0 : 0.0;
    });
    std::vector<MeasureReport> out;
    out.reserve(width);
    const double trials = static_cast<double>(mc.n_trials);
    for (std::size_t k = 0; k < width; ++k) {
        const double r = acc[k].mean();
        MeasureReport rep{r, 3.0 * std::sqrt(r * (1.0 - r) / trials), Method::monte_carlo, {}};
        rep.meta["k"] = std::to_string(k);
        rep.meta["n"] = std::to_string(n);
        rep.meta["trials"] = std::to_string(mc.n_trials);
        rep.meta["seed"] = std::to_string(mc.seed);
        rep.meta["streams"] = std::to_string(mc.n_streams);
        out.push_back(std::move(rep));
    }
    return out;
}

MeasureReport rkn_monte_carlo(const SystemSpec& sys, const MonteCarloConfig& mc)
{
    sys.validate();
    if (sys.k == 0) {
        MeasureReport rep{1.0, 0.0, Method::monte_carlo, {}};
        rep.meta["k"] = "0";
        rep.meta["n"] = std::to_string(sys.n);
        return rep;
    }
    const int n = sys.n;
    const int k = sys.k;
    const auto acc = run_monte_carlo(mc, [&](std::mt19937_64& rng) {
        const double t = sys.stress.sample(rng);
        int exceed = 0;
        for (int i = 0; i < n; ++i) exceed += sys.strength.sample(rng) > t ? 1 : 0;
        return exceed >= k ? 1.0 : 0.0;
    });
    const double r = acc.mean();
    MeasureReport rep{r, 3.0 * std::sqrt(r * (1.0 - r) / static_cast<double>(mc.n_trials)), Method::monte_carlo, {}};
    rep.meta["strength"] = sys.strength.label();
    rep.meta["stress"] = sys.stress.label();
    rep.meta["k"] = std::to_string(k);
    rep.meta["n"] = std::to_string(n);
    rep.meta["trials"] = std::to_string(mc.n_trials);
    rep.meta["seed"] = std::to_string(mc.seed);
    rep.meta["streams"] = std::to_string(mc.n_streams);
    return rep;
}

std::vector<Figure1Row> figure1_data(const std::vector<double>& thetas, int n)
{
    if (n < 1) throw DomainError("figure1_data: n must be >= 1");
    std::vector<Figure1Row> rows;
    rows.reserve(thetas.size() * (static_cast<std::size_t>(n) + 1));
    for (double th : thetas) {
        for (int k = 0; k <= n; ++k) rows.push_back({th, k, rkn_power_closed(th, k, n)});
    }
    return rows;
}

}  // namespace cigf
