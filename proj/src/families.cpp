#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "cigf/distribution.hpp"
#include "cigf/errors.hpp"
#include "detail.hpp"

namespace cigf {
namespace {

using detail::fmt;

class UniformModel final : public DistributionModel {
public:
    UniformModel(double l, double r) : l_(l), r_(r) {}

    double cdf(double x) const override
    {
        if (x <= l_) return 0.0;
        if (x >= r_) return 1.0;
        return (x - l_) / (r_ - l_);
    }
    double sf(double x) const override
    {
        if (x <= l_) return 1.0;
        if (x >= r_) return 0.0;
        return (r_ - x) / (r_ - l_);
    }
    double quantile(double u) const override { return u >= 1.0 ? r_ : l_ + u * (r_ - l_); }
    double quantile_upper(double q) const override { return q >= 1.0 ? l_ : r_ - q * (r_ - l_); }
    bool has_pdf() const override { return true; }
    double pdf(double x) const override { return (x < l_ || x > r_) ? 0.0 : 1.0 / (r_ - l_); }
    double quantile_density(double, double) const override { return 1.0 / (r_ - l_); }
    bool has_mgf() const override { return true; }
    double mgf(double s) const override
    {
        if (s == 0.0) return 1.0;
        const double w = s * (r_ - l_);
        return std::exp(s * l_) * std::expm1(w) / w;
    }
    std::optional<double> mean() const override { return 0.5 * (l_ + r_); }
    SupportInterval support() const override { return {l_, r_}; }
    FamilyTag tag() const override { return {Family::uniform, {l_, r_}, "uniform(" + fmt(l_) + "," + fmt(r_) + ")"}; }

private:
    double l_;
    double r_;
};

// F(x) = x^theta on (0,1).
class PowerModel final : public DistributionModel {
public:
    explicit PowerModel(double theta) : t_(theta) {}

    double cdf(double x) const override
    {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return std::pow(x, t_);
    }
    double sf(double x) const override
    {
        if (x <= 0.0) return 1.0;
        if (x >= 1.0) return 0.0;
        return -std::expm1(t_ * std::log(x));
    }
    double quantile(double u) const override { return std::pow(u, 1.0 / t_); }
    double quantile_upper(double q) const override { return std::exp(std::log1p(-q) / t_); }
    bool has_pdf() const override { return true; }
    double pdf(double x) const override
    {
        if (x < 0.0 || x > 1.0) return 0.0;
        return t_ * std::pow(x, t_ - 1.0);
    }
    double quantile_density(double u, double v) const override
    {
        const double lu = u <= 0.5 ? std::log(u) : std::log1p(-v);
        return t_ * std::exp(lu * (t_ - 1.0) / t_);
    }
    bool has_mgf() const override { return true; }
    double mgf(double s) const override
    {
        if (s == 0.0) return 1.0;
        const GapIntegrand f = [&](double x, double lo_gap, double) {
            return t_ * std::pow(lo_gap, t_ - 1.0) * std::exp(s * x);
        };
        QuadSpec q;
        q.abs_tol = 1e-14;
        q.rel_tol = 1e-12;
        return integrate_1d(f, 0.0, 1.0, q).value;
    }
    std::optional<double> mean() const override { return t_ / (t_ + 1.0); }
    SupportInterval support() const override { return {0.0, 1.0}; }
    FamilyTag tag() const override { return {Family::power, {t_}, "power(" + fmt(t_) + ")"}; }

private:
    double t_;
};

class ExponentialModel final : public DistributionModel {
public:
    explicit ExponentialModel(double lambda) : lam_(lambda) {}

    double cdf(double x) const override { return x <= 0.0 ? 0.0 : -std::expm1(-lam_ * x); }
    double sf(double x) const override { return x <= 0.0 ? 1.0 : std::exp(-lam_ * x); }
    double quantile(double u) const override { return -std::log1p(-u) / lam_; }
    double quantile_upper(double q) const override { return -std::log(q) / lam_; }
    bool has_pdf() const override { return true; }
    double pdf(double x) const override { return x < 0.0 ? 0.0 : lam_ * std::exp(-lam_ * x); }
    double quantile_density(double, double v) const override { return lam_ * v; }
    bool has_mgf() const override { return true; }
    double mgf(double s) const override { return s < lam_ ? lam_ / (lam_ - s) : kInf; }
    std::optional<double> mean() const override { return 1.0 / lam_; }
    SupportInterval support() const override { return {0.0, kInf}; }
    FamilyTag tag() const override { return {Family::exponential, {lam_}, "exponential(" + fmt(lam_) + ")"}; }

private:
    double lam_;
};

// Location 0, scale lambda.
class LaplaceModel final : public DistributionModel {
public:
    explicit LaplaceModel(double lambda) : lam_(lambda) {}

    double cdf(double x) const override { return x < 0.0 ? 0.5 * std::exp(x / lam_) : 1.0 - 0.5 * std::exp(-x / lam_); }
    double sf(double x) const override { return x < 0.0 ? 1.0 - 0.5 * std::exp(x / lam_) : 0.5 * std::exp(-x / lam_); }
    double quantile(double u) const override
    {
        return u <= 0.5 ? lam_ * std::log(2.0 * u) : -lam_ * std::log(2.0 * (1.0 - u));
    }
    double quantile_upper(double q) const override
    {
        return q <= 0.5 ? -lam_ * std::log(2.0 * q) : lam_ * std::log(2.0 * (1.0 - q));
    }
    bool has_pdf() const override { return true; }
    double pdf(double x) const override { return std::exp(-std::fabs(x) / lam_) / (2.0 * lam_); }
    double quantile_density(double u, double v) const override { return std::min(u, v) / lam_; }
    bool has_mgf() const override { return true; }
    double mgf(double s) const override
    {
        const double z = lam_ * s;
        return std::fabs(z) < 1.0 ? 1.0 / (1.0 - z * z) : kInf;
    }
    std::optional<double> mean() const override { return 0.0; }
    SupportInterval support() const override { return {-kInf, kInf}; }
    FamilyTag tag() const override { return {Family::laplace, {lam_}, "laplace(" + fmt(lam_) + ")"}; }

private:
    double lam_;
};

// Erlang(2, lambda) is Gamma(shape 2, scale 1/lambda); the regularized gamma
// functions give both tails without cancellation.
class Erlang2Model final : public DistributionModel {
public:
    explicit Erlang2Model(double lambda) : lam_(lambda) {}

    double cdf(double x) const override { return x <= 0.0 ? 0.0 : boost::math::gamma_p(2.0, lam_ * x); }
    double sf(double x) const override { return x <= 0.0 ? 1.0 : boost::math::gamma_q(2.0, lam_ * x); }
    double quantile(double u) const override
    {
        if (u <= 0.0) return 0.0;
        if (u >= 1.0) return kInf;
        return boost::math::gamma_p_inv(2.0, u) / lam_;
    }
    double quantile_upper(double q) const override
    {
        if (q >= 1.0) return 0.0;
        if (q <= 0.0) return kInf;
        return boost::math::gamma_q_inv(2.0, q) / lam_;
    }
    bool has_pdf() const override { return true; }
    double pdf(double x) const override { return x < 0.0 ? 0.0 : lam_ * lam_ * x * std::exp(-lam_ * x); }
    bool has_mgf() const override { return true; }
    double mgf(double s) const override
    {
        if (s >= lam_) return kInf;
        const double m = lam_ / (lam_ - s);
        return m * m;
    }
    std::optional<double> mean() const override { return 2.0 / lam_; }
    SupportInterval support() const override { return {0.0, kInf}; }
    FamilyTag tag() const override { return {Family::erlang2, {lam_}, "erlang2(" + fmt(lam_) + ")"}; }

private:
    double lam_;
};

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be finite and > 0");
}

}  // namespace

Distribution bernoulli(double p)
{
    if (!(p > 0.0 && p < 1.0)) throw DomainError("bernoulli: p must lie in (0,1)");
    std::vector<Atom> atoms{{0.0, 1.0 - p}, {1.0, p}};
    return Distribution(
        std::make_shared<detail::DiscreteModel>(std::move(atoms), FamilyTag{Family::bernoulli, {p}, "bernoulli(" + fmt(p) + ")"}));
}

Distribution uniform(double l, double r)
{
    if (!std::isfinite(l) || !std::isfinite(r) || !(l < r)) throw DomainError("uniform: requires finite l < r");
    return Distribution(std::make_shared<UniformModel>(l, r));
}

Distribution power(double theta)
{
    require_positive(theta, "power: theta");
    return Distribution(std::make_shared<PowerModel>(theta));
}

Distribution exponential(double lambda)
{
    require_positive(lambda, "exponential: lambda");
    return Distribution(std::make_shared<ExponentialModel>(lambda));
}

Distribution laplace(double lambda)
{
    require_positive(lambda, "laplace: lambda");
    return Distribution(std::make_shared<LaplaceModel>(lambda));
}

Distribution erlang2(double lambda)
{
    require_positive(lambda, "erlang2: lambda");
    return Distribution(std::make_shared<Erlang2Model>(lambda));
}

Distribution degenerate(double c)
{
    if (!std::isfinite(c)) throw DomainError("degenerate: location must be finite");
    std::vector<Atom> atoms{{c, 1.0}};
    return Distribution(
        std::make_shared<detail::DiscreteModel>(std::move(atoms), FamilyTag{Family::degenerate, {c}, "degenerate(" + fmt(c) + ")"}));
}

Distribution make_family(const std::string& name, const std::vector<double>& params)
{
    auto need = [&](std::size_t n) {
        if (params.size() != n) {
            throw DomainError("make_family: " + name + " takes " + std::to_string(n) + " parameter(s), got " +
                              std::to_string(params.size()));
        }
    };
    if (name == "bernoulli") return need(1), bernoulli(params[0]);
    if (name == "uniform") return need(2), uniform(params[0], params[1]);
    if (name == "power") return need(1), power(params[0]);
    if (name == "exponential") return need(1), exponential(params[0]);
    if (name == "laplace") return need(1), laplace(params[0]);
    if (name == "erlang2") return need(1), erlang2(params[0]);
    if (name == "degenerate") return need(1), degenerate(params[0]);
    throw DomainError("make_family: unknown family '" + name + "'");
}

}  // namespace cigf
