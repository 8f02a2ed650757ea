#include "cigf/gini.hpp"

#include <algorithm>
#include <cmath>

#include "cigf/errors.hpp"
#include "cigf/functional.hpp"
#include "cigf/reliability.hpp"
#include "detail.hpp"

namespace cigf {

using detail::fmt;

namespace {

constexpr int kValidationGrid = 1001;
constexpr double kOrderSlack = 1e-9;
constexpr double kAxiomTol = 1e-10;

void validate_distortion(const std::function<double(double)>& q, const std::string& label)
{
    if (q(0.0) != 0.0) throw DomainError("distortion " + label + ": q(0) must be 0");
    if (q(1.0) != 1.0) throw DomainError("distortion " + label + ": q(1) must be 1");
    double prev = 0.0;
    for (int i = 0; i < kValidationGrid; ++i) {
        const double u = static_cast<double>(i) / (kValidationGrid - 1);
        const double v = q(u);
        if (!(v >= 0.0 && v <= 1.0)) {
            throw DomainError("distortion " + label + ": q(" + fmt(u) + ") = " + fmt(v) + " leaves [0,1]");
        }
        if (v < prev) throw DomainError("distortion " + label + ": decreases near u = " + fmt(u));
        prev = v;
    }
}

bool close(double a, double b)
{
    return std::fabs(a - b) <= kAxiomTol * std::max(1.0, std::fabs(b));
}

}  // namespace

Distortion Distortion::identity()
{
    return {};
}

Distortion Distortion::power(double a)
{
    if (!(a >= 0.0) || !std::isfinite(a)) throw DomainError("power distortion: exponent must be finite and >= 0");
    Distortion d;
    d.kind_ = a == 1.0 ? Kind::identity : Kind::power;
    d.a_ = a;
    d.label_ = a == 1.0 ? "id" : "pow(" + fmt(a) + ")";
    return d;
}

Distortion Distortion::callback(std::function<double(double)> q, std::string label)
{
    if (!q) throw DomainError("distortion callback is empty");
    validate_distortion(q, label);
    Distortion d;
    d.kind_ = Kind::callback;
    d.fn_ = std::move(q);
    d.label_ = std::move(label);
    return d;
}

double Distortion::operator()(double u) const
{
    switch (kind_) {
    case Kind::identity:
        return u;
    case Kind::power:
        if (u <= 0.0) return 0.0;
        return a_ == 0.0 ? 1.0 : std::pow(u, a_);
    default:
        return fn_(u);
    }
}

std::optional<ParamPair> DistortionPair::as_params() const
{
    if (q1.kind() == Distortion::Kind::callback || q2.kind() == Distortion::Kind::callback) return std::nullopt;
    return ParamPair{q1.exponent(), q2.exponent()};
}

std::string DistortionPair::label() const
{
    return "(" + q1.label() + ", " + q2.label() + ")";
}

MeasureReport q_gini(const Distribution& x, const DistortionPair& q, const QuadSpec& spec)
{
    const CdfIntegrand phi = [&q](double f, double fb) {
        const double a = q.q1(f);
        return a == 0.0 ? 0.0 : a * q.q2(fb);
    };
    const Endpoint e = probe_divergence(x, phi);
    if (e != Endpoint::none) {
        throw DomainError("q_gini " + q.label() + " diverges at the " + (e == Endpoint::lower ? "lower" : "upper") +
                          " end of " + x.label());
    }
    const FunctionalResult r = cdf_functional(x, phi, spec);
    MeasureReport rep{std::max(0.0, r.q.value), r.q.err_est,
                      r.form == FunctionalForm::sum ? Method::closed_form : Method::quadrature, {}};
    rep.meta["distribution"] = x.label();
    rep.meta["distortion"] = q.label();
    rep.meta["form"] = form_name(r.form);
    return rep;
}

MeasureReport weighted_q_gini(const Distribution& x, const DistortionPair& q, const Distribution& t,
                              const QuadSpec& spec)
{
    const SupportInterval sx = x.support();
    const SupportInterval st = t.support();
    const double lo = std::max(sx.l, st.l);
    const double hi = std::min(sx.r, st.r);
    auto phi = [&](double at) {
        const double a = q.q1(x.cdf(at));
        return a == 0.0 ? 0.0 : a * q.q2(x.sf(at));
    };
    MeasureReport rep{0.0, 0.0, Method::closed_form, {}};
    rep.meta["distribution"] = x.label();
    rep.meta["weight"] = t.label();
    rep.meta["distortion"] = q.label();

    if (const auto* atoms = t.atoms()) {
        bool any = false;
        for (const Atom& a : *atoms) {
            if (a.x < lo || a.x > hi) continue;
            any = true;
            rep.value += a.p * phi(a.x);
        }
        if (!any) throw DomainError("weighted_q_gini: no atom of " + t.label() + " lies in the support of " + x.label());
        rep.meta["form"] = "sum";
        return rep;
    }
    if (!(lo < hi)) {
        throw DomainError("weighted_q_gini: supports of " + x.label() + " and " + t.label() + " do not overlap");
    }
    // dF_T becomes du over the T-probability range of the overlap.
    const double u_lo = lo > st.l ? t.cdf(lo) : 0.0;
    const double v_hi = hi < st.r ? t.sf(hi) : 0.0;
    const double u_hi = 1.0 - v_hi;
    if (!(u_lo < u_hi)) {
        throw DomainError("weighted_q_gini: the overlap of the supports carries no mass of " + t.label());
    }
    const GapIntegrand f = [&](double u, double lo_gap, double hi_gap) {
        const double uq = u_lo == 0.0 ? lo_gap : u;
        const double vq = v_hi == 0.0 ? hi_gap : 1.0 - u;
        const double at = uq <= 0.5 ? t.quantile(uq) : t.quantile_upper(vq);
        return phi(std::clamp(at, lo, hi));
    };
    const QuadResult r = integrate_1d(f, u_lo, u_hi, spec);
    rep.value = std::max(0.0, r.value);
    rep.err_est = r.err_est;
    rep.method = Method::quadrature;
    rep.meta["form"] = "quantile";
    return rep;
}

MeasureReport mean_value_repr(const Distribution& x, const Distribution& t, const MonteCarloConfig& mc)
{
    const McAccumulator acc = run_monte_carlo(mc, [&](std::mt19937_64& rng) {
        const double a = x.sample(rng);
        const double b = x.sample(rng);
        return 0.5 * (t.cdf(std::max(a, b)) - t.cdf(std::min(a, b)));
    });
    MeasureReport rep{acc.mean(), 3.0 * acc.std_error(), Method::monte_carlo, {}};
    rep.meta["distribution"] = x.label();
    rep.meta["weight"] = t.label();
    rep.meta["trials"] = std::to_string(mc.n_trials);
    rep.meta["seed"] = std::to_string(mc.seed);
    rep.meta["streams"] = std::to_string(mc.n_streams);
    return rep;
}

const char* tri_name(Tri t)
{
    switch (t) {
    case Tri::holds: return "holds";
    case Tri::fails: return "fails";
    default: return "undetermined";
    }
}

Tri dispersive_check(const Distribution& x, const Distribution& y, int grid_size)
{
    if (grid_size < 2) throw DomainError("dispersive_check: grid_size must be >= 2");
    const int n = grid_size;
    auto u_at = [n](int i) { return static_cast<double>(i) / (n + 1); };
    auto beyond = [](double small, double large) {
        return large - small > kOrderSlack * std::max({1.0, std::fabs(small), std::fabs(large)});
    };

    if (x.has_pdf() && y.has_pdf() && !x.is_discrete() && !y.is_discrete()) {
        for (int i = 1; i <= n; ++i) {
            const double u = u_at(i);
            const double v = 1.0 - u;
            const double fx = x.quantile_density(u, v);
            const double gy = y.quantile_density(u, v);
            if (!std::isfinite(fx) || !std::isfinite(gy)) return Tri::undetermined;
            if (beyond(fx, gy)) return Tri::fails;
        }
        return Tri::holds;
    }
    std::vector<double> qx(static_cast<std::size_t>(n));
    std::vector<double> qy(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const double u = u_at(i);
        qx[static_cast<std::size_t>(i - 1)] = u <= 0.5 ? x.quantile(u) : x.quantile_upper(1.0 - u);
        qy[static_cast<std::size_t>(i - 1)] = u <= 0.5 ? y.quantile(u) : y.quantile_upper(1.0 - u);
        if (!std::isfinite(qx.back()) || !std::isfinite(qy.back())) return Tri::undetermined;
    }
    for (std::size_t i = 0; i < qx.size(); ++i) {
        for (std::size_t j = i + 1; j < qx.size(); ++j) {
            if (beyond(qy[j] - qy[i], qx[j] - qx[i])) return Tri::fails;
        }
    }
    return Tri::holds;
}

bool GiniReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const GiniCheck& c) { return !c.applicable || c.pass; });
}

GiniReport variability_axioms_check(const Distribution& x, const Distribution& y, const DistortionPair& q,
                                    const QuadSpec& spec, std::optional<bool> asserted_dispersive)
{
    GiniReport rep;
    const double gx = q_gini(x, q, spec).value;

    const double shifted = q_gini(affine(x, 1.0, 5.0), q, spec).value;
    rep.checks.push_back({"translation", true, close(shifted, gx), shifted, gx, "delta=5"});

    const double scaled = q_gini(affine(x, 3.0, 0.0), q, spec).value;
    rep.checks.push_back({"homogeneity", true, close(scaled, 3.0 * gx), scaled, 3.0 * gx, "gamma=3"});

    const double c = x.quantile(0.5);
    const double gd = q_gini(degenerate(c), q, spec).value;
    rep.checks.push_back({"degenerate", true, std::fabs(gd) <= kAxiomTol, gd, 0.0, "at " + fmt(c)});

    rep.checks.push_back({"nonnegative", true, gx >= 0.0, gx, 0.0, {}});

    GiniCheck mono{"dispersive_monotone", true, true, gx, 0.0, {}};
    if (!x.support().same_as(y.support())) {
        mono.applicable = false;
        mono.note = "not applicable: supports differ";
    } else {
        bool ordered;
        if (asserted_dispersive) {
            ordered = *asserted_dispersive;
            mono.note = std::string("hypothesis asserted by caller; dispersive_check: ") +
                        tri_name(dispersive_check(x, y));
        } else {
            const Tri d = dispersive_check(x, y);
            ordered = d == Tri::holds;
            mono.note = std::string("dispersive_check: ") + tri_name(d);
        }
        if (!ordered) {
            mono.applicable = false;
            mono.note = "not applicable: " + mono.note;
        } else {
            mono.rhs = q_gini(y, q, spec).value;
            mono.pass = mono.lhs <= mono.rhs + kOrderSlack;
        }
    }
    rep.checks.push_back(std::move(mono));
    return rep;
}

namespace {

enum class Monotone { increasing, decreasing, constant, neither };

Monotone pdf_shape(const Distribution& t)
{
    constexpr int n = 400;
    bool up = true;
    bool down = true;
    double prev = t.pdf(t.quantile(1.0 / (n + 1)));
    for (int i = 2; i <= n; ++i) {
        const double u = static_cast<double>(i) / (n + 1);
        const double cur = t.pdf(u <= 0.5 ? t.quantile(u) : t.quantile_upper(1.0 - u));
        const double slack = 1e-12 * std::max(std::fabs(prev), std::fabs(cur));
        if (cur < prev - slack) up = false;
        if (cur > prev + slack) down = false;
        prev = cur;
    }
    if (up && down) return Monotone::constant;
    if (up) return Monotone::increasing;
    if (down) return Monotone::decreasing;
    return Monotone::neither;
}

// Empty string when the hypotheses of the weighted comparison hold,
// otherwise the reason they do not.
std::string weighted_hypotheses(const Distribution& x, const Distribution& y, const Distribution& t)
{
    const SupportInterval sx = x.support();
    if (!sx.same_as(y.support())) return "supports of X and Y differ";
    if (t.is_discrete() || !t.has_pdf()) return "T is not absolutely continuous";
    const Monotone m = pdf_shape(t);
    const bool case_i = (m == Monotone::increasing || m == Monotone::constant) && std::isfinite(sx.l);
    const bool case_ii = (m == Monotone::decreasing || m == Monotone::constant) && std::isfinite(sx.r);
    if (!case_i && !case_ii) {
        return m == Monotone::neither ? "f_T is not monotone"
                                      : "f_T monotone but the matching common endpoint is infinite";
    }
    const Tri d = dispersive_check(x, y);
    if (d != Tri::holds) return std::string("X <=_d Y ") + tri_name(d);
    return {};
}

}  // namespace

GiniReport weighted_ordering_check(const Distribution& x, const Distribution& y, const Distribution& t,
                                   const DistortionPair& q, const QuadSpec& spec)
{
    GiniReport rep;
    GiniCheck c{"weighted_ordering", true, true, 0.0, 0.0, {}};
    const std::string why = weighted_hypotheses(x, y, t);
    if (!why.empty()) {
        c.applicable = false;
        c.note = "not applicable: " + why;
    } else {
        c.lhs = weighted_q_gini(x, q, t, spec).value;
        c.rhs = weighted_q_gini(y, q, t, spec).value;
        c.pass = c.lhs <= c.rhs + kOrderSlack;
    }
    rep.checks.push_back(std::move(c));
    return rep;
}

GiniReport rkn_comparison(const Distribution& x, const Distribution& y, const Distribution& t, int n,
                          const QuadSpec& spec)
{
    if (n < 1) throw DomainError("rkn_comparison: n must be >= 1");
    GiniReport rep;
    const std::string why = weighted_hypotheses(x, y, t);
    for (int k = 0; k <= n; ++k) {
        GiniCheck c{"rkn_ordering", true, true, 0.0, 0.0, "k=" + std::to_string(k) + " n=" + std::to_string(n)};
        if (!why.empty()) {
            c.applicable = false;
            c.note += " not applicable: " + why;
        } else {
            c.lhs = rkn_general({n, k, x, t}, spec).value;
            c.rhs = rkn_general({n, k, y, t}, spec).value;
            c.pass = c.lhs <= c.rhs + kOrderSlack;
        }
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

}  // namespace cigf
