#include "cigf/bounds.hpp"

#include <cmath>
#include <string>

#include "cigf/errors.hpp"
#include "detail.hpp"

namespace cigf {

using detail::fmt;

ChernoffBound chernoff_bound(const Distribution& x, ParamPair p, double s1, double s2, std::optional<double> r_opt)
{
    const SupportInterval s = x.support();
    if (!(s.l >= 0.0)) throw DomainError("chernoff_bound: X must be nonnegative");
    if (!x.has_mgf()) throw DomainError("chernoff_bound: " + x.label() + " has no moment generating function");
    if (!(s1 < 0.0) || !(s2 > 0.0)) throw DomainError("chernoff_bound: requires s1 < 0 < s2");
    BoundSide side;
    if (p.alpha >= 0.0 && p.beta >= 0.0) {
        side = BoundSide::upper;
    } else if (p.alpha <= 0.0 && p.beta <= 0.0) {
        side = BoundSide::lower;
    } else {
        throw DomainError("chernoff_bound: alpha and beta must share a sign, got (" + fmt(p.alpha) + ", " +
                          fmt(p.beta) + ")");
    }
    const double m1 = x.mgf(s1);
    const double m2 = x.mgf(s2);
    if (!std::isfinite(m1)) throw DomainError("chernoff_bound: M(s1) is infinite at s1 = " + fmt(s1));
    if (!std::isfinite(m2)) throw DomainError("chernoff_bound: M(s2) is infinite at s2 = " + fmt(s2));
    const double r = r_opt ? *r_opt : s.r;
    const double c = p.alpha * s1 + p.beta * s2;
    double g;
    if (std::isinf(r)) {
        if (!(c > 0.0)) throw DomainError("chernoff_bound: infinite support needs alpha s1 + beta s2 > 0");
        g = 1.0 / c;
    } else if (c == 0.0) {
        g = r;
    } else {
        g = -std::expm1(-c * r) / c;
    }
    return {g * std::pow(m1, p.alpha) * std::pow(m2, p.beta), side};
}

namespace {

double mgf_radius(const Distribution& x, double cap)
{
    auto finite_at = [&](double s) { return std::isfinite(x.mgf(s)) && std::isfinite(x.mgf(-s)); };
    if (finite_at(cap)) return cap;
    double lo = 0.0;
    double hi = cap;
    for (int i = 0; i < 60; ++i) {
        const double m = 0.5 * (lo + hi);
        if (finite_at(m)) lo = m;
        else hi = m;
    }
    return lo;
}

}  // namespace

ChernoffSearch chernoff_grid(const Distribution& x, ParamPair p, int n, double s_cap)
{
    if (n < 1) throw DomainError("chernoff_grid: n must be >= 1");
    const double s0 = mgf_radius(x, s_cap);
    if (!(s0 > 0.0)) throw DomainError("chernoff_grid: moment generating function is infinite near 0");
    ChernoffSearch out;
    bool have = false;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const double s1 = -s0 * i / (n + 1);
            const double s2 = s0 * j / (n + 1);
            ChernoffBound b;
            try {
                b = chernoff_bound(x, p, s1, s2);
            } catch (const DomainError&) {
                continue;
            }
            ++out.admissible;
            const bool better = b.side == BoundSide::upper ? b.bound < out.best.bound : b.bound > out.best.bound;
            if (!have || better) {
                out.best = b;
                out.s1 = s1;
                out.s2 = s2;
                have = true;
            }
        }
    }
    if (!have) throw DomainError("chernoff_grid: no admissible (s1, s2) on the grid");
    return out;
}

double erlang2_chernoff_infimum(double lambda, double beta_)
{
    if (!(lambda > 0.0) || !(beta_ > 0.0)) throw DomainError("erlang2_chernoff_infimum: requires lambda, beta > 0");
    return std::pow(2.0, -2.0 * beta_) * std::pow((1.0 + 2.0 * beta_) / beta_, 1.0 + 2.0 * beta_) / lambda;
}

BernoulliBounds bernoulli_bounds(const Distribution& x, ParamPair p, const QuadSpec& spec)
{
    // A form is reported only when its exponent range applies and both
    // marginals it needs are finite.
    auto finite = [&](ParamPair q) { return in_domain(x, q) != DomainStatus::outside; };
    BernoulliBounds b;
    if (p.alpha >= 0.0 && p.alpha <= 1.0 && finite({0.0, p.beta}) && finite({0.0, p.beta + 1.0})) {
        b.k_form = k_measure(x, p.beta, spec).value - p.alpha * k_measure(x, p.beta + 1.0, spec).value;
    }
    if (p.beta >= 0.0 && p.beta <= 1.0 && finite({p.alpha, 0.0}) && finite({p.alpha + 1.0, 0.0})) {
        b.h_form = h_measure(x, p.alpha, spec).value - p.beta * h_measure(x, p.alpha + 1.0, spec).value;
    }
    return b;
}

MinkowskiBounds minkowski_bounds(const Distribution& x, double gamma, const QuadSpec& spec)
{
    const SupportInterval s = x.support();
    if (!s.bounded()) throw DomainError("minkowski_bounds: requires a bounded support, got " + x.label());
    if (!(gamma >= 1.0)) throw DomainError("minkowski_bounds: gamma must be >= 1");
    MinkowskiBounds m;
    m.gamma = gamma;
    const double inv = 1.0 / gamma;
    const double w = std::pow(s.width(), inv);
    m.k_value = k_measure(x, gamma, spec).value;
    m.h_value = h_measure(x, gamma, spec).value;
    const double k_root = std::pow(m.k_value, inv);
    const double h_root = std::pow(m.h_value, inv);
    auto lower = [&](double d, const char* name) {
        if (d < 0.0) {
            m.clamped.push_back(name);
            return 0.0;
        }
        return std::pow(d, gamma);
    };
    m.k_lower = lower(w - h_root, "K_lower");
    m.k_upper = std::pow(w + h_root, gamma);
    m.h_lower = lower(w - k_root, "H_lower");
    m.h_upper = std::pow(w + k_root, gamma);
    m.g_diag = cigf::cigf(x, {gamma, gamma}, spec).value;
    m.g_diag_upper_via_k = std::pow(k_root + std::pow(k_measure(x, 2.0 * gamma, spec).value, inv), gamma);
    m.g_diag_upper_via_h = std::pow(h_root + std::pow(h_measure(x, 2.0 * gamma, spec).value, inv), gamma);
    return m;
}

double holder_bound(const Distribution& x, double theta, const QuadSpec& spec)
{
    const SupportInterval s = x.support();
    if (!s.bounded()) throw DomainError("holder_bound: requires a bounded support, got " + x.label());
    if (!(theta > 0.0 && theta < 1.0)) throw DomainError("holder_bound: theta must lie in (0,1)");
    // r - E X = H_X(1) and E X - l = K_X(1).
    const double upper_gap = h_measure(x, 1.0, spec).value;
    const double lower_gap = k_measure(x, 1.0, spec).value;
    return std::pow(upper_gap, theta) * std::pow(lower_gap, 1.0 - theta);
}

bool BoundsReport::all_pass() const
{
    return failures() == 0;
}

int BoundsReport::failures() const
{
    int n = 0;
    for (const auto& c : checks) n += c.pass ? 0 : 1;
    return n;
}

std::vector<ParamPair> default_bounds_grid()
{
    std::vector<ParamPair> g;
    for (double a : {0.5, 1.0, 2.0}) {
        for (double b : {0.5, 1.0, 2.0}) g.push_back({a, b});
    }
    for (ParamPair p : {ParamPair{-0.5, -0.5}, ParamPair{-0.25, -0.5}, ParamPair{-0.5, -0.25}}) g.push_back(p);
    return g;
}

namespace {

void add_check(BoundsReport& rep, std::string name, std::string params, double value, double bound, BoundSide side,
               std::string note = {})
{
    BoundCheck c;
    c.name = std::move(name);
    c.params = std::move(params);
    c.value = value;
    c.bound = bound;
    c.side = side;
    c.margin = side == BoundSide::upper ? bound - value : value - bound;
    c.pass = c.margin >= -kBoundSlack;
    c.note = std::move(note);
    rep.checks.push_back(std::move(c));
}

std::string pp(ParamPair p)
{
    return "alpha=" + fmt(p.alpha) + " beta=" + fmt(p.beta);
}

}  // namespace

BoundsReport verify_bounds(const Distribution& x, const std::vector<ParamPair>& grid, const QuadSpec& spec)
{
    BoundsReport rep;
    rep.distribution = x.label();
    const SupportInterval s = x.support();
    const bool chernoff_ok = x.has_mgf() && s.l >= 0.0;

    for (const ParamPair p : grid) {
        if (in_domain(x, p) == DomainStatus::outside) {
            rep.skipped.push_back("G(" + pp(p) + ") outside domain");
            continue;
        }
        const double g = cigf::cigf(x, p, spec).value;

        if (chernoff_ok) {
            try {
                const ChernoffSearch cs = chernoff_grid(x, p);
                add_check(rep, "chernoff", pp(p) + " s1=" + fmt(cs.s1) + " s2=" + fmt(cs.s2), g, cs.best.bound,
                          cs.best.side, "tightest of " + std::to_string(cs.admissible) + " grid points");
            } catch (const DomainError& e) {
                rep.skipped.push_back("chernoff " + pp(p) + ": " + e.what());
            }
        }

        try {
            const BernoulliBounds b = bernoulli_bounds(x, p, spec);
            if (b.k_form) add_check(rep, "bernoulli_k", pp(p), g, *b.k_form, BoundSide::upper);
            if (b.h_form) add_check(rep, "bernoulli_h", pp(p), g, *b.h_form, BoundSide::upper);
        } catch (const DomainError& e) {
            rep.skipped.push_back("bernoulli " + pp(p) + ": " + e.what());
        }
    }

    if (s.bounded()) {
        for (double gamma : {1.0, 1.5, 2.0, 3.0}) {
            try {
                const MinkowskiBounds m = minkowski_bounds(x, gamma, spec);
                const std::string gp = "gamma=" + fmt(gamma);
                std::string note;
                for (const auto& c : m.clamped) note += (note.empty() ? "clamped: " : ", ") + c;
                add_check(rep, "minkowski_k_lower", gp, m.k_value, m.k_lower, BoundSide::lower, note);
                add_check(rep, "minkowski_k_upper", gp, m.k_value, m.k_upper, BoundSide::upper);
                add_check(rep, "minkowski_h_lower", gp, m.h_value, m.h_lower, BoundSide::lower, note);
                add_check(rep, "minkowski_h_upper", gp, m.h_value, m.h_upper, BoundSide::upper);
                add_check(rep, "minkowski_g_via_k", gp, m.g_diag, *m.g_diag_upper_via_k, BoundSide::upper);
                add_check(rep, "minkowski_g_via_h", gp, m.g_diag, *m.g_diag_upper_via_h, BoundSide::upper);
            } catch (const DomainError& e) {
                rep.skipped.push_back("minkowski gamma=" + fmt(gamma) + ": " + e.what());
            }
        }
        for (int i = 1; i <= 9; ++i) {
            const double theta = 0.1 * i;
            const ParamPair p{theta, 1.0 - theta};
            if (in_domain(x, p) == DomainStatus::outside) continue;
            try {
                add_check(rep, "holder", "theta=" + fmt(theta), cigf::cigf(x, p, spec).value,
                          holder_bound(x, theta, spec), BoundSide::upper);
            } catch (const DomainError& e) {
                rep.skipped.push_back("holder theta=" + fmt(theta) + ": " + e.what());
            }
        }
    }
    return rep;
}

}  // namespace cigf
