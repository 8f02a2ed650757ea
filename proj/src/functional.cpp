#include "cigf/functional.hpp"

#include <cmath>

#include "cigf/errors.hpp"

namespace cigf {

const char* form_name(FunctionalForm f)
{
    switch (f) {
    case FunctionalForm::sum: return "sum";
    case FunctionalForm::quantile: return "quantile";
    case FunctionalForm::x_space: return "x";
    }
    return "?";
}

namespace {

QuadResult discrete_sum(const std::vector<Atom>& atoms, const CdfIntegrand& phi)
{
    // Between atoms k and k+1 the law sits at F = P_k, F̄ = 1 - P_k.
    std::vector<double> upper(atoms.size(), 0.0);
    double run = 0.0;
    for (std::size_t i = atoms.size(); i-- > 0;) {
        upper[i] = run;
        run += atoms[i].p;
    }
    double cum = 0.0;
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < atoms.size(); ++k) {
        cum += atoms[k].p;
        acc += phi(std::min(cum, 1.0), upper[k]) * (atoms[k + 1].x - atoms[k].x);
    }
    return {acc, 0.0};
}

double quantile_integrand(const Distribution& x, const CdfIntegrand& phi, double u, double v)
{
    const double num = phi(u, v);
    if (num == 0.0) return 0.0;
    return num / x.quantile_density(u, v);
}

}  // namespace

FunctionalResult cdf_functional(const Distribution& x, const CdfIntegrand& phi, const QuadSpec& spec)
{
    spec.validate();
    if (const auto* atoms = x.atoms()) return {discrete_sum(*atoms, phi), FunctionalForm::sum};

    if (x.has_pdf()) {
        const GapIntegrand g = [&](double, double u, double v) { return quantile_integrand(x, phi, u, v); };
        return {integrate_1d(g, 0.0, 1.0, spec), FunctionalForm::quantile};
    }

    SupportInterval s = x.support();
    double tail_err = 0.0;
    if (!s.bounded()) {
        const double a = std::isfinite(s.l) ? s.l : x.quantile(spec.tail_mass);
        const double b = std::isfinite(s.r) ? s.r : x.quantile_upper(spec.tail_mass);
        tail_err = spec.tail_mass * (b - a);
        s = {a, b};
    }
    const GapIntegrand g = [&](double t, double, double) { return phi(x.cdf(t), x.sf(t)); };
    QuadResult r = integrate_1d(g, s.l, s.r, spec);
    r.err_est += tail_err;
    return {r, FunctionalForm::x_space};
}

Endpoint probe_divergence(const Distribution& x, const CdfIntegrand& phi)
{
    if (x.is_discrete() || !x.has_pdf()) return Endpoint::none;
    // Local power p of g(t) ~ t^p from two points; p <= -1 is not integrable.
    auto slope = [](double g1, double g2, double t1, double t2) {
        if (!(g1 > 0.0) || !(g2 > 0.0) || !std::isfinite(g1) || !std::isfinite(g2)) {
            return (std::isinf(g2) || std::isinf(g1)) ? -kInf : 0.0;
        }
        return std::log(g2 / g1) / std::log(t2 / t1);
    };
    constexpr double t1 = 1e-7;
    constexpr double t2 = 1e-11;
    constexpr double slack = 1e-3;
    try {
        const double lo = slope(quantile_integrand(x, phi, t1, 1.0 - t1), quantile_integrand(x, phi, t2, 1.0 - t2), t1,
                                t2);
        if (lo <= -1.0 + slack) return Endpoint::lower;
        const double hi = slope(quantile_integrand(x, phi, 1.0 - t1, t1), quantile_integrand(x, phi, 1.0 - t2, t2), t1,
                                t2);
        if (hi <= -1.0 + slack) return Endpoint::upper;
    } catch (const DomainError&) {
        return Endpoint::none;
    }
    return Endpoint::none;
}

}  // namespace cigf
