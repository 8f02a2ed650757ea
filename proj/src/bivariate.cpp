#include "cigf/bivariate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "cigf/errors.hpp"
#include "detail.hpp"

namespace cigf {

using detail::fmt;

namespace {

double clamp01(double v)
{
    return std::clamp(v, 0.0, 1.0);
}

double pw(double v, double a)
{
    if (a == 0.0) return 1.0;
    if (v == 0.0) return a > 0.0 ? 0.0 : kInf;
    return std::pow(v, a);
}

}  // namespace

BivariateDistribution BivariateDistribution::fgm2x2(double theta)
{
    if (!(theta > -0.25 && theta < 0.25)) {
        throw DomainError("fgm2x2: theta must lie in (-1/4, 1/4), got " + fmt(theta));
    }
    BivariateDistribution v;
    v.kind_ = Kind::fgm2x2;
    v.theta_ = theta;
    v.label_ = "fgm2x2(" + fmt(theta) + ")";
    const double same = 0.25 + theta;
    const double cross = 0.25 - theta;
    // P(i, j) for i, j in {0, 1}.
    const std::array<std::array<double, 2>, 2> p{{{same, cross}, {cross, same}}};
    v.cdf_ = [p](double x, double y) {
        double s = 0.0;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                if (i <= x && j <= y) s += p[i][j];
            }
        }
        return s;
    };
    v.sf_ = [p](double x, double y) {
        double s = 0.0;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                if (i > x && j > y) s += p[i][j];
            }
        }
        return s;
    };
    v.cdf_node_ = [same](double, double, const Gaps2D&) { return same; };
    v.sf_node_ = [same](double, double, const Gaps2D&) { return same; };
    v.region_ = Region2D::rectangle(0.0, 1.0, 0.0, 1.0);
    v.rect_ = v.region_;
    v.mx_ = bernoulli(0.5);
    v.my_ = bernoulli(0.5);
    return v;
}

BivariateDistribution BivariateDistribution::triangle_uniform()
{
    BivariateDistribution v;
    v.kind_ = Kind::triangle;
    v.label_ = "triangle_uniform";
    v.cdf_ = [](double x, double y) {
        if (x <= 0.0 || y <= 0.0) return 0.0;
        const double a = std::min(x, 1.0);
        const double b = std::min(y, 1.0);
        const double over = std::max(0.0, a + b - 1.0);
        return clamp01(2.0 * a * b - over * over);
    };
    v.sf_ = [](double x, double y) {
        const double d = std::max(0.0, 1.0 - std::max(x, 0.0) - std::max(y, 0.0));
        return d * d;
    };
    // On S: x, y are the gaps to the axes and 1 - x - y the gap to the hypotenuse.
    v.cdf_node_ = [](double, double, const Gaps2D& g) { return 2.0 * g.x_lo * g.y_lo; };
    v.sf_node_ = [](double, double, const Gaps2D& g) { return g.y_hi * g.y_hi; };
    v.region_ = Region2D::simplex(0.0, 1.0, 0.0, 1.0);
    v.rect_ = Region2D::rectangle(0.0, 1.0, 0.0, 1.0);
    ContinuousSpec m;
    m.cdf = [](double x) { return x <= 0.0 ? 0.0 : x >= 1.0 ? 1.0 : x * (2.0 - x); };
    m.sf = [](double x) { return x <= 0.0 ? 1.0 : x >= 1.0 ? 0.0 : (1.0 - x) * (1.0 - x); };
    m.pdf = [](double x) { return (x < 0.0 || x > 1.0) ? 0.0 : 2.0 * (1.0 - x); };
    m.support = {0.0, 1.0};
    m.mean = 1.0 / 3.0;
    m.label = "triangle_marginal";
    v.mx_ = continuous(m);
    v.my_ = v.mx_;
    return v;
}

BivariateDistribution BivariateDistribution::sum_density()
{
    BivariateDistribution v;
    v.kind_ = Kind::sum_density;
    v.label_ = "sum_density";
    v.cdf_ = [](double x, double y) {
        if (x <= 0.0 || y <= 0.0) return 0.0;
        const double a = std::min(x, 1.0);
        const double b = std::min(y, 1.0);
        return 0.5 * a * b * (a + b);
    };
    v.sf_ = [](double x, double y) {
        const double a = std::clamp(x, 0.0, 1.0);
        const double b = std::clamp(y, 0.0, 1.0);
        return 0.5 * (1.0 - a) * (1.0 - b) * (a + b + 2.0);
    };
    v.cdf_node_ = [](double, double, const Gaps2D& g) { return 0.5 * g.x_lo * g.y_lo * (g.x_lo + g.y_lo); };
    v.sf_node_ = [](double x, double y, const Gaps2D& g) { return 0.5 * g.x_hi * g.y_hi * (x + y + 2.0); };
    v.region_ = Region2D::rectangle(0.0, 1.0, 0.0, 1.0);
    v.rect_ = v.region_;
    ContinuousSpec m;
    m.cdf = [](double x) { return x <= 0.0 ? 0.0 : x >= 1.0 ? 1.0 : 0.5 * x * (x + 1.0); };
    m.sf = [](double x) { return x <= 0.0 ? 1.0 : x >= 1.0 ? 0.0 : 0.5 * (1.0 - x) * (x + 2.0); };
    m.pdf = [](double x) { return (x < 0.0 || x > 1.0) ? 0.0 : x + 0.5; };
    m.support = {0.0, 1.0};
    m.mean = 7.0 / 12.0;
    m.label = "sum_density_marginal";
    v.mx_ = continuous(m);
    v.my_ = v.mx_;
    return v;
}

BivariateDistribution BivariateDistribution::product(const Distribution& x, const Distribution& y)
{
    BivariateDistribution v;
    v.kind_ = Kind::product;
    v.label_ = "product(" + x.label() + ", " + y.label() + ")";
    v.mx_ = x;
    v.my_ = y;
    v.cdf_ = [x, y](double a, double b) { return x.cdf(a) * y.cdf(b); };
    v.sf_ = [x, y](double a, double b) { return x.sf(a) * y.sf(b); };
    v.cdf_node_ = [x, y](double a, double b, const Gaps2D&) { return x.cdf(a) * y.cdf(b); };
    v.sf_node_ = [x, y](double a, double b, const Gaps2D&) { return x.sf(a) * y.sf(b); };
    const SupportInterval sx = x.support();
    const SupportInterval sy = y.support();
    if (!(sx.l < sx.r) || !(sy.l < sy.r)) {
        v.empty_ = true;
        return v;
    }
    v.region_ = Region2D::rectangle(sx.l, sx.r, sy.l, sy.r);
    v.rect_ = v.region_;
    return v;
}

double BivariateDistribution::cdf(double x, double y) const
{
    return cdf_ ? cdf_(x, y) : 0.0;
}

double BivariateDistribution::sf(double x, double y) const
{
    return sf_ ? sf_(x, y) : 0.0;
}

BivariateDistribution make_bivariate(const std::string& name, double theta)
{
    if (name == "fgm2x2") return BivariateDistribution::fgm2x2(theta);
    if (name == "triangle" || name == "triangle_uniform") return BivariateDistribution::triangle_uniform();
    if (name == "sum_density") return BivariateDistribution::sum_density();
    throw DomainError("make_bivariate: unknown example '" + name + "'");
}

DomainStatus in_domain2(const BivariateDistribution& v, ParamPair p)
{
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta)) return DomainStatus::outside;
    using K = BivariateDistribution::Kind;
    switch (v.kind()) {
    case K::fgm2x2:
        return DomainStatus::inside;
    case K::triangle:
        return (p.alpha > -1.0 && p.beta > -0.5) ? DomainStatus::inside : DomainStatus::outside;
    case K::sum_density:
        // F ~ r^3 at the origin and ~ x on the axes; F̄ ~ r^2 at (1,1) and
        // ~ (1-x) on the far edges.
        return (p.alpha > -2.0 / 3.0 && p.beta > -1.0) ? DomainStatus::inside : DomainStatus::outside;
    case K::product: {
        if (v.empty()) return DomainStatus::inside;
        const DomainStatus a = in_domain(v.marginal_x(), p);
        const DomainStatus b = in_domain(v.marginal_y(), p);
        if (a == DomainStatus::outside || b == DomainStatus::outside) return DomainStatus::outside;
        if (a == DomainStatus::inside && b == DomainStatus::inside) return DomainStatus::inside;
        return DomainStatus::undetermined;
    }
    }
    return DomainStatus::undetermined;
}

std::optional<double> cigf2_closed_form(const BivariateDistribution& v, ParamPair p)
{
    using K = BivariateDistribution::Kind;
    if (v.kind() == K::fgm2x2) return std::pow(0.25 + v.theta(), p.alpha + p.beta);
    if (v.kind() == K::triangle) {
        return std::pow(2.0, p.alpha) * beta(p.alpha + 1.0, 2.0 * p.beta + 1.0) *
               beta(p.alpha + 1.0, p.alpha + 2.0 * p.beta + 2.0);
    }
    return std::nullopt;
}

namespace {

void require_inside(const BivariateDistribution& v, ParamPair p, const char* name)
{
    if (in_domain2(v, p) == DomainStatus::outside) {
        throw DomainError(std::string(name) + ": (alpha, beta) = (" + fmt(p.alpha) + ", " + fmt(p.beta) +
                          ") is outside the finiteness domain of " + v.label());
    }
}

QuadResult cigf2_quadrature(const BivariateDistribution& v, ParamPair p, const QuadSpec& spec)
{
    // Near a corner F or F̄ can underflow at the deepest tanh-sinh nodes.
    // When the exponents are known to be integrable there, those nodes carry
    // negligible weight and are dropped instead of producing inf.
    const bool certified = in_domain2(v, p) == DomainStatus::inside;
    const Integrand2DGap f = [&](double x, double y, const Gaps2D& g) {
        const double fv = v.cdf_at(x, y, g);
        const double sv = v.sf_at(x, y, g);
        if (certified && ((fv == 0.0 && p.alpha < 0.0) || (sv == 0.0 && p.beta < 0.0))) return 0.0;
        const double a = pw(fv, p.alpha);
        if (a == 0.0) return 0.0;
        return a * pw(sv, p.beta);
    };
    return integrate_2d(f, v.region(), spec);
}

}  // namespace

MeasureReport cigf2(const BivariateDistribution& v, ParamPair p, const QuadSpec& spec, const CigfOptions& opts)
{
    spec.validate();
    require_inside(v, p, "cigf2");
    MeasureReport rep{0.0, 0.0, Method::closed_form, {}};
    rep.meta["distribution"] = v.label();
    if (v.empty()) {
        rep.meta["note"] = "S has zero area";
        return rep;
    }
    using Path = CigfOptions::Path;
    Path path = opts.path;
    const auto cf = cigf2_closed_form(v, p);
    if (path == Path::automatic) path = cf ? Path::closed_form : Path::quadrature;
    if (path == Path::series) throw DomainError("cigf2: no series representation for " + v.label());
    if (path == Path::closed_form) {
        if (!cf) throw DomainError("cigf2: no closed form for " + v.label());
        rep.value = *cf;
        rep.err_est = 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(*cf);
    } else {
        const QuadResult q = cigf2_quadrature(v, p, spec);
        rep.value = q.value;
        rep.err_est = q.err_est;
        rep.method = Method::quadrature;
    }
    if (opts.cross_check) {
        const QuadResult q = cigf2_quadrature(v, p, spec);
        rep.meta["quadrature"] = fmt(q.value);
        if (cf) rep.meta["closed_form"] = fmt(*cf);
    }
    return rep;
}

MeasureReport cigf2_monte_carlo(const BivariateDistribution& v, ParamPair p, const MonteCarloConfig& mc)
{
    require_inside(v, p, "cigf2_monte_carlo");
    const Region2D& s = v.region();
    if (!std::isfinite(s.x_hi - s.x_lo) || !std::isfinite(s.y_hi - s.y_lo)) {
        throw DomainError("cigf2_monte_carlo: S must be bounded");
    }
    const double box = (s.x_hi - s.x_lo) * (s.y_hi - s.y_lo);
    const McAccumulator acc = run_monte_carlo(mc, [&](std::mt19937_64& rng) {
        const double x = s.x_lo + (s.x_hi - s.x_lo) * uniform01(rng);
        const double y = s.y_lo + (s.y_hi - s.y_lo) * uniform01(rng);
        if (!s.contains(x, y)) return 0.0;
        const double a = pw(v.cdf(x, y), p.alpha);
        return a == 0.0 ? 0.0 : box * a * pw(v.sf(x, y), p.beta);
    });
    MeasureReport rep{acc.mean(), 3.0 * acc.std_error(), Method::monte_carlo, {}};
    rep.meta["distribution"] = v.label();
    rep.meta["trials"] = std::to_string(mc.n_trials);
    rep.meta["seed"] = std::to_string(mc.seed);
    return rep;
}

std::pair<MeasureReport, MeasureReport> cigf2_product_check(const Distribution& x, const Distribution& y, ParamPair p,
                                                            const QuadSpec& spec)
{
    const BivariateDistribution v = BivariateDistribution::product(x, y);
    CigfOptions quad;
    quad.path = CigfOptions::Path::quadrature;
    MeasureReport joint = cigf2(v, p, spec, quad);
    const MeasureReport gx = cigf(x, p, spec);
    const MeasureReport gy = cigf(y, p, spec);
    MeasureReport prod{gx.value * gy.value, std::fabs(gx.value) * gy.err_est + std::fabs(gy.value) * gx.err_est,
                       gx.method == gy.method ? gx.method : Method::quadrature, {}};
    prod.meta["distribution"] = v.label();
    return {joint, prod};
}

namespace {

double nlog(double w)
{
    return w >= 1.0 ? 0.0 : -std::log(w);
}

MeasureReport joint_direct(const BivariateDistribution& v, EntropyKind kind, double order, double norm,
                           JointRegion where, const QuadSpec& spec, const std::string& name)
{
    MeasureReport rep{0.0, 0.0, Method::quadrature, {}};
    rep.meta["distribution"] = v.label();
    rep.meta["measure"] = name;
    rep.meta["region"] = where == JointRegion::s_region ? "S" : "support_rectangle";
    if (v.empty()) return rep;
    const bool on_s = where == JointRegion::s_region;
    const Region2D& r = on_s ? v.region() : v.support_rectangle();
    if (kind == EntropyKind::ce && (!std::isfinite(r.x_hi) || !std::isfinite(r.y_hi))) {
        throw DomainError(name + ": diverges for " + v.label() + " (F does not vanish towards an infinite right end)");
    }
    if (kind == EntropyKind::cre && (!std::isfinite(r.x_lo) || !std::isfinite(r.y_lo))) {
        throw DomainError(name + ": diverges for " + v.label() + " (F̄ does not vanish towards an infinite left end)");
    }
    const Integrand2DGap f = [&](double x, double y, const Gaps2D& g) {
        double w;
        if (kind == EntropyKind::cre) w = on_s ? v.sf_at(x, y, g) : v.sf(x, y);
        else w = on_s ? v.cdf_at(x, y, g) : v.cdf(x, y);
        if (w <= 0.0) return 0.0;
        if (order == 0.0) return w;
        const double l = nlog(w);
        if (l == 0.0) return 0.0;
        return w * std::pow(l, order) / norm;
    };
    const QuadResult q = integrate_2d(f, r, spec);
    rep.value = std::max(0.0, q.value);
    rep.err_est = q.err_est;
    return rep;
}

void require_order(double order, double min_order, bool strict, const std::string& name)
{
    const bool ok = strict ? order > min_order : order >= min_order;
    if (!ok || !std::isfinite(order)) {
        throw DomainError(name + ": order " + fmt(order) + " must be " + (strict ? "> " : ">= ") + fmt(min_order));
    }
}

}  // namespace

MeasureReport joint_cre(const BivariateDistribution& v, const QuadSpec& spec, JointRegion where)
{
    return joint_direct(v, EntropyKind::cre, 1.0, 1.0, where, spec, "joint_cre");
}

MeasureReport joint_ce(const BivariateDistribution& v, const QuadSpec& spec, JointRegion where)
{
    return joint_direct(v, EntropyKind::ce, 1.0, 1.0, where, spec, "joint_ce");
}

MeasureReport joint_cre_n(const BivariateDistribution& v, int n, const QuadSpec& spec, JointRegion where)
{
    require_order(n, 0.0, false, "joint_cre_n");
    return joint_direct(v, EntropyKind::cre, n, std::tgamma(n + 1.0), where, spec, "joint_cre_" + std::to_string(n));
}

MeasureReport joint_ce_n(const BivariateDistribution& v, int n, const QuadSpec& spec, JointRegion where)
{
    require_order(n, 1.0, false, "joint_ce_n");
    return joint_direct(v, EntropyKind::ce, n, std::tgamma(n + 1.0), where, spec, "joint_ce_" + std::to_string(n));
}

MeasureReport joint_cre_frac(const BivariateDistribution& v, double nu, const QuadSpec& spec, JointRegion where)
{
    require_order(nu, 0.0, false, "joint_cre_frac");
    return joint_direct(v, EntropyKind::cre, nu, std::tgamma(nu + 1.0), where, spec, "joint_cre_frac(" + fmt(nu) + ")");
}

MeasureReport joint_ce_frac(const BivariateDistribution& v, double nu, const QuadSpec& spec, JointRegion where)
{
    require_order(nu, 0.0, true, "joint_ce_frac");
    return joint_direct(v, EntropyKind::ce, nu, std::tgamma(nu + 1.0), where, spec, "joint_ce_frac(" + fmt(nu) + ")");
}

std::pair<MeasureReport, MeasureReport> joint_recovery_check(const BivariateDistribution& v, EntropyKind which,
                                                             double order, const QuadSpec& spec,
                                                             const CigfOptions& opts)
{
    const bool cre = which == EntropyKind::cre;
    const bool integer = order == std::floor(order);
    require_order(order, cre ? 0.0 : (integer ? 1.0 : 0.0), !cre && !integer, "joint_recovery_check");
    const double norm = std::tgamma(order + 1.0);
    MeasureReport direct = joint_direct(v, which, order, norm, JointRegion::s_region, spec,
                                        std::string(cre ? "joint_cre" : "joint_ce") + "(" + fmt(order) + ")");

    auto pair = [cre](double t) { return cre ? ParamPair{0.0, t} : ParamPair{t, 0.0}; };
    const std::function<double(double)> g = [&](double t) { return cigf2(v, pair(t), spec, opts).value; };
    if (in_domain2(v, pair(1.0)) == DomainStatus::outside) {
        throw DomainError("joint_recovery_check: anchor point is outside the finiteness domain of " + v.label());
    }
    MeasureReport rec{0.0, 0.0, cigf2(v, pair(1.0), spec, opts).method, {}};
    rec.meta["distribution"] = v.label();
    rec.meta["order"] = fmt(order);
    if (integer && order == 0.0) {
        rec.value = g(1.0);
        rec.meta["via"] = "cigf2 value";
    } else if (integer) {
        const int n = static_cast<int>(order);
        if (n > 4) throw DomainError("joint_recovery_check: integer orders above 4 are not supported");
        double h = default_diff_step(n);
        const double reach = n <= 2 ? 1.0 : 2.0;
        auto ok = [&](double step) {
            return in_domain2(v, pair(1.0 - reach * step)) != DomainStatus::outside &&
                   in_domain2(v, pair(1.0 + reach * step)) != DomainStatus::outside;
        };
        if (!ok(h)) {
            h *= 0.5;
            if (!ok(h)) throw DomainError("difference stencil leaves the finiteness domain of " + v.label());
        }
        const double coarse = central_diff(g, 1.0, n, h);
        const double fine = central_diff(g, 1.0, n, 0.5 * h);
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        rec.value = sign * (4.0 * fine - coarse) / 3.0 / norm;
        rec.err_est = std::fabs(fine - coarse) / 3.0 / norm;
        rec.meta["via"] = "cigf2 derivative";
        rec.meta["step"] = fmt(h);
    } else {
        FracDiffSpec fd;
        fd.order = order;
        const QuadResult c = caputo_deriv(g, 1.0, fd, spec);
        rec.value = c.value / norm;
        rec.err_est = c.err_est / norm;
        rec.meta["via"] = "cigf2 caputo";
    }
    return {direct, rec};
}

IndependenceIdentity independence_identity(const BivariateDistribution& v, EntropyKind kind, const QuadSpec& spec)
{
    const Distribution& x = v.marginal_x();
    const Distribution& y = v.marginal_y();
    const auto mx = x.mean();
    const auto my = y.mean();
    if (!mx || !my) throw DomainError("independence_identity: marginal means are required");
    const SupportInterval sx = x.support();
    const SupportInterval sy = y.support();
    IndependenceIdentity out;
    out.kind = kind;
    if (kind == EntropyKind::ce) {
        out.joint = joint_ce(v, spec).value;
        out.from_marginals = (sy.r - *my) * ce(x, spec).value + (sx.r - *mx) * ce(y, spec).value;
    } else {
        out.joint = joint_cre(v, spec).value;
        out.from_marginals = (*my - sy.l) * cre(x, spec).value + (*mx - sx.l) * cre(y, spec).value;
    }
    return out;
}

MeasureReport odds2(const BivariateDistribution& v, double beta_, const QuadSpec& spec, const CigfOptions& opts)
{
    const ParamPair p{-beta_, beta_};
    if (in_domain2(v, p) == DomainStatus::outside) {
        throw DomainError("odds2 with beta = " + fmt(beta_) + " is infinite for " + v.label() +
                          " (requires (-beta, beta) in the finiteness domain)");
    }
    MeasureReport r = cigf2(v, p, spec, opts);
    r.meta["measure"] = "odds2";
    return r;
}

}  // namespace cigf
