#include <algorithm>
#include <cmath>
#include <string>

#include "cigf/distribution.hpp"
#include "cigf/errors.hpp"
#include "detail.hpp"

namespace cigf {
namespace {

using detail::fmt;

std::optional<double> mean_from_sf(const DistributionModel& m)
{
    const SupportInterval s = m.support();
    if (!std::isfinite(s.l)) return std::nullopt;
    try {
        QuadSpec q;
        q.abs_tol = 1e-13;
        q.rel_tol = 1e-12;
        const Integrand f = [&m](double x) { return m.sf(x); };
        return s.l + integrate_1d(f, s.l, s.r, q).value;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

class AffineModel final : public DistributionModel {
public:
    AffineModel(Distribution base, double gamma, double delta) : x_(std::move(base)), g_(gamma), d_(delta) {}

    double cdf(double y) const override
    {
        const double x = (y - d_) / g_;
        return g_ > 0.0 ? x_.cdf(x) : x_.sf(x);
    }
    double sf(double y) const override
    {
        const double x = (y - d_) / g_;
        return g_ > 0.0 ? x_.sf(x) : x_.cdf(x);
    }
    double quantile(double u) const override
    {
        return d_ + g_ * (g_ > 0.0 ? x_.model().quantile(u) : x_.model().quantile_upper(u));
    }
    double quantile_upper(double q) const override
    {
        return d_ + g_ * (g_ > 0.0 ? x_.model().quantile_upper(q) : x_.model().quantile(q));
    }
    bool has_pdf() const override { return x_.has_pdf(); }
    double pdf(double y) const override { return x_.pdf((y - d_) / g_) / std::fabs(g_); }
    double quantile_density(double u, double v) const override
    {
        return (g_ > 0.0 ? x_.quantile_density(u, v) : x_.quantile_density(v, u)) / std::fabs(g_);
    }
    bool has_mgf() const override { return x_.has_mgf(); }
    double mgf(double s) const override
    {
        const double m = x_.mgf(g_ * s);
        return std::isinf(m) ? m : std::exp(s * d_) * m;
    }
    std::optional<double> mean() const override
    {
        const auto m = x_.mean();
        if (!m) return std::nullopt;
        return g_ * *m + d_;
    }
    SupportInterval support() const override
    {
        const SupportInterval s = x_.support();
        const double a = g_ * s.l + d_;
        const double b = g_ * s.r + d_;
        return {std::min(a, b), std::max(a, b)};
    }
    FamilyTag tag() const override
    {
        return {Family::transformed, {g_, d_}, "affine(" + x_.label() + "," + fmt(g_) + "," + fmt(d_) + ")"};
    }

private:
    Distribution x_;
    double g_;
    double d_;
};

// Survival function raised to gamma.
class PhmModel final : public DistributionModel {
public:
    PhmModel(Distribution base, double gamma) : x_(std::move(base)), g_(gamma) { mean_ = mean_from_sf(*this); }

    double cdf(double x) const override { return -std::expm1(g_ * log_sf(x)); }
    double sf(double x) const override { return std::exp(g_ * log_sf(x)); }
    double quantile(double u) const override { return at_log_sf(std::log1p(-u) / g_); }
    double quantile_upper(double q) const override { return at_log_sf(std::log(q) / g_); }
    bool has_pdf() const override { return x_.has_pdf(); }
    double pdf(double x) const override
    {
        const double f = x_.pdf(x);
        if (f == 0.0) return 0.0;
        return g_ * std::exp((g_ - 1.0) * log_sf(x)) * f;
    }
    double quantile_density(double u, double v) const override
    {
        const double lw = (u <= 0.5 ? std::log1p(-u) : std::log(v)) / g_;
        const double w = std::exp(lw);
        return g_ * std::exp((g_ - 1.0) * lw) * x_.quantile_density(-std::expm1(lw), w);
    }
    std::optional<double> mean() const override { return mean_; }
    SupportInterval support() const override { return x_.support(); }
    FamilyTag tag() const override { return {Family::transformed, {g_}, "phm(" + x_.label() + "," + fmt(g_) + ")"}; }

private:
    double log_sf(double x) const
    {
        const double f = x_.cdf(x);
        return f < 0.5 ? std::log1p(-f) : std::log(x_.sf(x));
    }
    // x with log F̄_X(x) = lw.
    double at_log_sf(double lw) const
    {
        const double below = -std::expm1(lw);
        return below <= 0.5 ? x_.model().quantile(below) : x_.model().quantile_upper(std::exp(lw));
    }

    Distribution x_;
    double g_;
    std::optional<double> mean_;
};

// Distribution function raised to theta.
class PrhmModel final : public DistributionModel {
public:
    PrhmModel(Distribution base, double theta) : x_(std::move(base)), t_(theta) { mean_ = mean_from_sf(*this); }

    double cdf(double x) const override { return std::exp(t_ * log_cdf(x)); }
    double sf(double x) const override { return -std::expm1(t_ * log_cdf(x)); }
    double quantile(double u) const override { return at_log_cdf(std::log(u) / t_); }
    double quantile_upper(double q) const override { return at_log_cdf(std::log1p(-q) / t_); }
    bool has_pdf() const override { return x_.has_pdf(); }
    double pdf(double x) const override
    {
        const double f = x_.pdf(x);
        if (f == 0.0) return 0.0;
        return t_ * std::exp((t_ - 1.0) * log_cdf(x)) * f;
    }
    double quantile_density(double u, double v) const override
    {
        const double lw = (u <= 0.5 ? std::log(u) : std::log1p(-v)) / t_;
        const double w = std::exp(lw);
        return t_ * std::exp((t_ - 1.0) * lw) * x_.quantile_density(w, -std::expm1(lw));
    }
    std::optional<double> mean() const override { return mean_; }
    SupportInterval support() const override { return x_.support(); }
    FamilyTag tag() const override { return {Family::transformed, {t_}, "prhm(" + x_.label() + "," + fmt(t_) + ")"}; }

private:
    double log_cdf(double x) const
    {
        const double s = x_.sf(x);
        return s < 0.5 ? std::log1p(-s) : std::log(x_.cdf(x));
    }
    double at_log_cdf(double lw) const
    {
        const double w = std::exp(lw);
        return w <= 0.5 ? x_.model().quantile(w) : x_.model().quantile_upper(-std::expm1(lw));
    }

    Distribution x_;
    double t_;
    std::optional<double> mean_;
};

// Density F̄(x)/mu on (0, r).
class EquilibriumModel final : public DistributionModel {
public:
    EquilibriumModel(Distribution base, double mu, QuadSpec spec) : x_(std::move(base)), mu_(mu), q_(spec)
    {
        q_.abs_tol = std::min(q_.abs_tol, 1e-12);
        q_.rel_tol = std::min(q_.rel_tol, 1e-11);
    }

    double cdf(double x) const override
    {
        if (x <= 0.0) return 0.0;
        if (x >= x_.support().r) return 1.0;
        return std::min(1.0, area(0.0, x) / mu_);
    }
    double sf(double x) const override
    {
        if (x <= 0.0) return 1.0;
        if (x >= x_.support().r) return 0.0;
        return std::min(1.0, area(x, x_.support().r) / mu_);
    }
    double quantile(double u) const override { return solve(u, 1.0 - u); }
    double quantile_upper(double q) const override { return solve(1.0 - q, q); }
    bool has_pdf() const override { return true; }
    double pdf(double x) const override { return x < 0.0 ? 0.0 : x_.sf(x) / mu_; }
    double quantile_density(double u, double v) const override { return pdf(solve(u, v)); }
    SupportInterval support() const override { return {0.0, x_.support().r}; }
    FamilyTag tag() const override { return {Family::transformed, {}, "equilibrium(" + x_.label() + ")"}; }

private:
    // int_a^b F̄, exact for discrete laws.
    double area(double a, double b) const
    {
        if (const auto* atoms = x_.atoms()) {
            double acc = 0.0;
            double lo = a;
            for (const auto& at : *atoms) {
                if (at.x <= lo) continue;
                const double hi = std::min(at.x, b);
                acc += x_.sf(lo) * (hi - lo);
                lo = hi;
                if (lo >= b) break;
            }
            return acc;
        }
        const Integrand f = [this](double t) { return x_.sf(t); };
        return integrate_1d(f, a, b, q_).value;
    }
    double solve(double u, double v) const
    {
        return detail::bisect_quantile([this](double x) { return cdf(x); }, [this](double x) { return sf(x); }, u, v,
                                       support());
    }

    Distribution x_;
    double mu_;
    QuadSpec q_;
};

std::vector<Atom> remap_atoms(const std::vector<Atom>& atoms, const std::function<double(double)>& cum_map)
{
    std::vector<Atom> out;
    double prev_old = 0.0;
    double prev_new = 0.0;
    for (const auto& a : atoms) {
        prev_old += a.p;
        const double now = cum_map(std::min(prev_old, 1.0));
        out.push_back({a.x, now - prev_new});
        prev_new = now;
    }
    // Absorb rounding in the final atom so the masses sum to 1.
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < out.size(); ++i) total += out[i].p;
    out.back().p = 1.0 - total;
    return out;
}

}  // namespace

Distribution affine(const Distribution& x, double gamma, double delta)
{
    if (gamma == 0.0 || !std::isfinite(gamma)) throw DomainError("affine: gamma must be finite and nonzero");
    if (!std::isfinite(delta)) throw DomainError("affine: delta must be finite");
    if (gamma == 1.0 && delta == 0.0) return x;
    const FamilyTag t = x.tag();
    if (const auto* atoms = x.atoms()) {
        std::vector<Atom> mapped;
        for (const auto& a : *atoms) mapped.push_back({gamma * a.x + delta, a.p});
        return discrete(std::move(mapped));
    }
    if (t.family == Family::uniform) {
        const double a = gamma * t.params[0] + delta;
        const double b = gamma * t.params[1] + delta;
        return uniform(std::min(a, b), std::max(a, b));
    }
    if (t.family == Family::exponential && gamma > 0.0 && delta == 0.0) return exponential(t.params[0] / gamma);
    if (t.family == Family::erlang2 && gamma > 0.0 && delta == 0.0) return erlang2(t.params[0] / gamma);
    if (t.family == Family::laplace && delta == 0.0) return laplace(t.params[0] * std::fabs(gamma));
    return Distribution(std::make_shared<AffineModel>(x, gamma, delta));
}

Distribution prop_hazard(const Distribution& x, double gamma)
{
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("prop_hazard: gamma must be finite and > 0");
    if (gamma == 1.0) return x;
    const FamilyTag t = x.tag();
    if (t.family == Family::exponential) return exponential(t.params[0] * gamma);
    if (const auto* atoms = x.atoms()) {
        return discrete(remap_atoms(*atoms, [gamma](double p) { return 1.0 - std::pow(1.0 - p, gamma); }));
    }
    return Distribution(std::make_shared<PhmModel>(x, gamma));
}

Distribution prop_rev_hazard(const Distribution& x, double theta)
{
    if (!(theta > 0.0) || !std::isfinite(theta)) throw DomainError("prop_rev_hazard: theta must be finite and > 0");
    if (theta == 1.0) return x;
    const FamilyTag t = x.tag();
    if (t.family == Family::uniform && t.params[0] == 0.0 && t.params[1] == 1.0) return power(theta);
    if (t.family == Family::power) return power(t.params[0] * theta);
    if (const auto* atoms = x.atoms()) {
        return discrete(remap_atoms(*atoms, [theta](double p) { return std::pow(p, theta); }));
    }
    return Distribution(std::make_shared<PrhmModel>(x, theta));
}

Distribution equilibrium(const Distribution& x, const QuadSpec& spec)
{
    const SupportInterval s = x.support();
    if (!(s.l >= 0.0)) throw DomainError("equilibrium: X must be nonnegative, support starts at " + fmt(s.l));
    const auto mu = x.mean();
    if (!mu || !std::isfinite(*mu) || !(*mu > 0.0)) throw DomainError("equilibrium: requires 0 < E[X] < inf");
    const FamilyTag t = x.tag();
    if (t.family == Family::exponential) return x;
    if (t.family == Family::degenerate) return uniform(0.0, t.params[0]);
    if (t.family == Family::uniform && t.params[0] == 0.0) return prop_hazard(x, 2.0);
    return Distribution(std::make_shared<EquilibriumModel>(x, *mu, spec));
}

}  // namespace cigf
