#include "cigf/entropy.hpp"

#include <cmath>
#include <string>

#include "cigf/errors.hpp"
#include "cigf/functional.hpp"
#include "detail.hpp"

namespace cigf {

using detail::fmt;

const char* entropy_kind_name(EntropyKind k)
{
    return k == EntropyKind::cre ? "cre" : "ce";
}

namespace {

// -log F̄ and -log F without cancellation near the ends.
double nlog_sf(double f, double fb)
{
    return f < 0.5 ? -std::log1p(-f) : -std::log(fb);
}

double nlog_cdf(double f, double fb)
{
    return fb < 0.5 ? -std::log1p(-fb) : -std::log(f);
}

MeasureReport direct(const Distribution& x, EntropyKind kind, double order, double norm, const QuadSpec& spec,
                     const std::string& name)
{
    const CdfIntegrand phi = [kind, order, norm](double f, double fb) {
        const double w = kind == EntropyKind::cre ? fb : f;
        if (w == 0.0) return 0.0;
        if (order == 0.0) return w;
        const double l = kind == EntropyKind::cre ? nlog_sf(f, fb) : nlog_cdf(f, fb);
        if (l <= 0.0) return 0.0;
        return w * std::pow(l, order) / norm;
    };
    const Endpoint e = probe_divergence(x, phi);
    if (e != Endpoint::none) {
        throw DomainError(name + " diverges at the " + (e == Endpoint::lower ? "lower" : "upper") + " end of " +
                          x.label());
    }
    const FunctionalResult r = cdf_functional(x, phi, spec);
    MeasureReport rep{std::max(0.0, r.q.value), r.q.err_est,
                      r.form == FunctionalForm::sum ? Method::closed_form : Method::quadrature, {}};
    rep.meta["form"] = form_name(r.form);
    rep.meta["distribution"] = x.label();
    rep.meta["measure"] = name;
    return rep;
}

void require_order(double order, double min_order, bool strict, const char* name)
{
    const bool ok = strict ? order > min_order : order >= min_order;
    if (!ok || !std::isfinite(order)) {
        throw DomainError(std::string(name) + ": order " + fmt(order) + " must be " + (strict ? "> " : ">= ") +
                          fmt(min_order));
    }
}

struct Slice {
    std::function<double(double)> g;
    std::function<DomainStatus(double)> status;
};

// t -> G(0, t) for cre, t -> G(t, 0) for ce; optionally via the marginals.
Slice make_slice(const Distribution& x, EntropyKind kind, const QuadSpec& spec, const CigfOptions& co, bool marginal)
{
    Slice s;
    auto pair = [kind](double t) { return kind == EntropyKind::cre ? ParamPair{0.0, t} : ParamPair{t, 0.0}; };
    s.g = [&x, &spec, co, pair, marginal, kind](double t) {
        if (marginal) return (kind == EntropyKind::cre ? k_measure(x, t, spec) : h_measure(x, t, spec)).value;
        return cigf(x, pair(t), spec, co).value;
    };
    s.status = [&x, pair](double t) { return in_domain(x, pair(t)); };
    return s;
}

MeasureReport integer_recovery(const Distribution& x, EntropyKind kind, int n, const QuadSpec& spec,
                               const RecoveryOptions& ro, bool marginal)
{
    if (n < 1 || n > 4) throw DomainError("derivative recovery supports orders 1..4, got " + std::to_string(n));
    if (x.is_degenerate()) return {0.0, 0.0, Method::closed_form, {{"distribution", x.label()}}};
    const Slice s = make_slice(x, kind, spec, ro.cigf, marginal);
    constexpr double anchor = 1.0;
    double h = ro.step > 0.0 ? ro.step : default_diff_step(n);
    const double reach = n <= 2 ? 1.0 : 2.0;
    auto stencil_ok = [&](double step) {
        return s.status(anchor - reach * step) != DomainStatus::outside &&
               s.status(anchor + reach * step) != DomainStatus::outside;
    };
    if (s.status(anchor) == DomainStatus::outside) {
        throw DomainError(std::string(entropy_kind_name(kind)) + " recovery: anchor point is outside the finiteness "
                          "domain of " + x.label());
    }
    if (!stencil_ok(h)) {
        h *= 0.5;
        if (!stencil_ok(h)) throw DomainError("difference stencil leaves the finiteness domain of " + x.label());
    }
    const double coarse = central_diff(s.g, anchor, n, h);
    const double fine = central_diff(s.g, anchor, n, 0.5 * h);
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double value = sign * (4.0 * fine - coarse) / 3.0 / fact;
    MeasureReport rep{value, std::fabs(fine - coarse) / 3.0 / fact, Method::closed_form, {}};
    const auto probe = cigf(x, kind == EntropyKind::cre ? ParamPair{0.0, anchor} : ParamPair{anchor, 0.0}, spec,
                            ro.cigf);
    rep.method = probe.method;
    rep.meta["distribution"] = x.label();
    rep.meta["via"] = marginal ? (kind == EntropyKind::cre ? "marginal K" : "marginal H") : "cigf derivative";
    rep.meta["order"] = std::to_string(n);
    rep.meta["step"] = fmt(h);
    return rep;
}

MeasureReport fractional_recovery(const Distribution& x, EntropyKind kind, double nu, const FracDiffSpec& fd_in,
                                  const QuadSpec& spec, const RecoveryOptions& ro, bool marginal)
{
    require_order(nu, 0.0, true, "fractional recovery");
    if (nu == std::floor(nu)) return integer_recovery(x, kind, static_cast<int>(nu), spec, ro, marginal);
    if (x.is_degenerate()) return {0.0, 0.0, Method::closed_form, {{"distribution", x.label()}}};
    const Slice s = make_slice(x, kind, spec, ro.cigf, marginal);
    FracDiffSpec fd = fd_in;
    fd.order = nu;
    if (ro.step > 0.0) fd.inner_step = ro.step;
    const QuadResult c = caputo_deriv(s.g, 1.0, fd, spec);
    const double norm = std::tgamma(nu + 1.0);
    const auto probe = cigf(x, kind == EntropyKind::cre ? ParamPair{0.0, 1.0} : ParamPair{1.0, 0.0}, spec, ro.cigf);
    MeasureReport rep{c.value / norm, c.err_est / norm, probe.method, {}};
    rep.meta["distribution"] = x.label();
    rep.meta["via"] = marginal ? "marginal caputo" : "cigf caputo";
    rep.meta["order"] = fmt(nu);
    rep.meta["caputo_cutoff"] = std::isfinite(fd.upper_cutoff) ? fmt(fd.upper_cutoff) : "auto";
    return rep;
}

}  // namespace

MeasureReport cre(const Distribution& x, const QuadSpec& spec)
{
    return direct(x, EntropyKind::cre, 1.0, 1.0, spec, "cre");
}

MeasureReport ce(const Distribution& x, const QuadSpec& spec)
{
    return direct(x, EntropyKind::ce, 1.0, 1.0, spec, "ce");
}

MeasureReport cre_n(const Distribution& x, int n, const QuadSpec& spec)
{
    require_order(n, 0.0, false, "cre_n");
    return direct(x, EntropyKind::cre, n, std::tgamma(n + 1.0), spec, "cre_" + std::to_string(n));
}

MeasureReport ce_n(const Distribution& x, int n, const QuadSpec& spec)
{
    require_order(n, 1.0, false, "ce_n");
    return direct(x, EntropyKind::ce, n, std::tgamma(n + 1.0), spec, "ce_" + std::to_string(n));
}

MeasureReport cre_frac(const Distribution& x, double nu, const QuadSpec& spec)
{
    require_order(nu, 0.0, false, "cre_frac");
    return direct(x, EntropyKind::cre, nu, std::tgamma(nu + 1.0), spec, "cre_frac(" + fmt(nu) + ")");
}

MeasureReport ce_frac(const Distribution& x, double nu, const QuadSpec& spec)
{
    require_order(nu, 0.0, true, "ce_frac");
    return direct(x, EntropyKind::ce, nu, std::tgamma(nu + 1.0), spec, "ce_frac(" + fmt(nu) + ")");
}

MeasureReport entropy_direct(const Distribution& x, EntropyKind kind, double order, const QuadSpec& spec)
{
    if (order == std::floor(order) && order < 1e6) {
        const int n = static_cast<int>(order);
        return kind == EntropyKind::cre ? cre_n(x, n, spec) : ce_n(x, n, spec);
    }
    return kind == EntropyKind::cre ? cre_frac(x, order, spec) : ce_frac(x, order, spec);
}

MeasureReport cre_from_cigf(const Distribution& x, const QuadSpec& spec, const RecoveryOptions& ro)
{
    return integer_recovery(x, EntropyKind::cre, 1, spec, ro, false);
}

MeasureReport ce_from_cigf(const Distribution& x, const QuadSpec& spec, const RecoveryOptions& ro)
{
    return integer_recovery(x, EntropyKind::ce, 1, spec, ro, false);
}

MeasureReport cre_n_from_cigf(const Distribution& x, int n, const QuadSpec& spec, const RecoveryOptions& ro)
{
    return integer_recovery(x, EntropyKind::cre, n, spec, ro, false);
}

MeasureReport ce_n_from_cigf(const Distribution& x, int n, const QuadSpec& spec, const RecoveryOptions& ro)
{
    return integer_recovery(x, EntropyKind::ce, n, spec, ro, false);
}

MeasureReport cre_frac_from_cigf(const Distribution& x, double nu, const FracDiffSpec& fd, const QuadSpec& spec,
                                 const RecoveryOptions& ro)
{
    return fractional_recovery(x, EntropyKind::cre, nu, fd, spec, ro, false);
}

MeasureReport ce_frac_from_cigf(const Distribution& x, double nu, const FracDiffSpec& fd, const QuadSpec& spec,
                                const RecoveryOptions& ro)
{
    return fractional_recovery(x, EntropyKind::ce, nu, fd, spec, ro, false);
}

MeasureReport marginal_recovery(const Distribution& x, EntropyKind kind, double order, const QuadSpec& spec,
                                const RecoveryOptions& ro)
{
    require_order(order, 0.0, true, "marginal_recovery");
    if (order == std::floor(order)) return integer_recovery(x, kind, static_cast<int>(order), spec, ro, true);
    return fractional_recovery(x, kind, order, FracDiffSpec{}, spec, ro, true);
}

MeasureReport golomb_ig(const Distribution& x, double nu, const QuadSpec& spec)
{
    if (!std::isfinite(nu)) throw DomainError("golomb_ig: nu must be finite");
    if (x.is_discrete() || !x.has_pdf()) throw DomainError("golomb_ig: " + x.label() + " has no density");
    const SupportInterval s = x.support();
    const GapIntegrand f = [&](double t, double lo_gap, double) {
        const double d = x.pdf(std::isfinite(s.l) ? s.l + lo_gap : t);
        if (d == 0.0) return nu > 0.0 ? 0.0 : kInf;
        return std::pow(d, nu);
    };
    const QuadResult r = integrate_1d(f, s.l, s.r, spec);
    MeasureReport rep{r.value, r.err_est, Method::quadrature, {}};
    rep.meta["distribution"] = x.label();
    rep.meta["measure"] = "golomb_ig(" + fmt(nu) + ")";
    return rep;
}

}  // namespace cigf
