#include "cigf/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "cigf/errors.hpp"
#include "detail.hpp"

namespace cigf {

bool SupportInterval::bounded() const
{
    return std::isfinite(l) && std::isfinite(r);
}

bool SupportInterval::same_as(const SupportInterval& o, double slack) const
{
    auto close = [slack](double a, double b) {
        if (std::isinf(a) || std::isinf(b)) return a == b;
        return std::fabs(a - b) <= slack * std::max(1.0, std::fabs(a));
    };
    return close(l, o.l) && close(r, o.r);
}

double DistributionModel::pdf(double) const
{
    throw DomainError("distribution '" + tag().label + "' has no density");
}

double DistributionModel::quantile_density(double u, double v) const
{
    if (!has_pdf()) throw DomainError("distribution '" + tag().label + "' has no density");
    return pdf(u <= 0.5 ? quantile(u) : quantile_upper(v));
}

double DistributionModel::mgf(double) const
{
    throw DomainError("distribution '" + tag().label + "' has no moment generating function");
}

// ---------------------------------------------------------------------------

Distribution::Distribution(std::shared_ptr<const DistributionModel> model) : m_(std::move(model))
{
    if (!m_) throw DomainError("Distribution: null model");
}

double Distribution::quantile(double u) const
{
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("quantile: u must lie in [0,1]");
    return m_->quantile(u);
}

double Distribution::quantile_upper(double q) const
{
    if (!(q >= 0.0 && q <= 1.0)) throw DomainError("quantile_upper: q must lie in [0,1]");
    return m_->quantile_upper(q);
}

bool Distribution::is_degenerate() const
{
    const auto* a = atoms();
    return a != nullptr && a->size() == 1;
}

double Distribution::cumulative_hazard(double x) const
{
    return -std::log(sf(x));
}

double Distribution::reversed_hazard_integral(double x) const
{
    return -std::log(cdf(x));
}

double Distribution::sample(std::mt19937_64& rng) const
{
    return m_->quantile(uniform01(rng));
}

double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double odds(const Distribution& x, double at)
{
    const double f = x.cdf(at);
    const double s = x.sf(at);
    if (!(f > 0.0) || !(s > 0.0)) {
        throw DomainError("odds: x = " + detail::fmt(at) + " is outside the open support of " + x.label());
    }
    return s / f;
}

// ---------------------------------------------------------------------------
// Discrete laws

namespace detail {

DiscreteModel::DiscreteModel(std::vector<Atom> atoms, FamilyTag tag) : atoms_(std::move(atoms)), tag_(std::move(tag))
{
    cum_.resize(atoms_.size());
    upper_.resize(atoms_.size());
    double run = 0.0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        run += atoms_[i].p;
        cum_[i] = run;
    }
    run = 0.0;
    for (std::size_t i = atoms_.size(); i-- > 0;) {
        upper_[i] = run;  // mass strictly above atom i
        run += atoms_[i].p;
    }
}

double DiscreteModel::cdf(double x) const
{
    const auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x, [](double v, const Atom& a) { return v < a.x; });
    if (it == atoms_.begin()) return 0.0;
    return std::min(1.0, cum_[static_cast<std::size_t>(it - atoms_.begin()) - 1]);
}

double DiscreteModel::sf(double x) const
{
    const auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x, [](double v, const Atom& a) { return v < a.x; });
    if (it == atoms_.begin()) return 1.0;
    return upper_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
}

double DiscreteModel::quantile(double u) const
{
    // sup{x : F(x) <= u} is the first atom whose cumulative exceeds u.
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
    if (it == cum_.end()) return atoms_.back().x;
    return atoms_[static_cast<std::size_t>(it - cum_.begin())].x;
}

double DiscreteModel::mgf(double s) const
{
    double m = 0.0;
    for (const auto& a : atoms_) m += a.p * std::exp(s * a.x);
    return m;
}

std::optional<double> DiscreteModel::mean() const
{
    double m = 0.0;
    for (const auto& a : atoms_) m += a.p * a.x;
    return m;
}

SupportInterval DiscreteModel::support() const
{
    return {atoms_.front().x, atoms_.back().x};
}

std::vector<Atom> normalize_atoms(std::vector<Atom> atoms)
{
    if (atoms.empty()) throw DomainError("discrete law needs at least one atom");
    std::map<double, double> merged;
    double total = 0.0;
    for (const auto& a : atoms) {
        if (!std::isfinite(a.x)) throw DomainError("discrete law: atom location must be finite");
        if (!(a.p >= 0.0)) throw DomainError("discrete law: probabilities must be >= 0");
        if (a.p == 0.0) continue;
        merged[a.x] += a.p;
        total += a.p;
    }
    if (std::fabs(total - 1.0) > 1e-12) {
        throw DomainError("discrete law: probabilities sum to " + fmt(total) + ", expected 1");
    }
    std::vector<Atom> out;
    out.reserve(merged.size());
    for (const auto& [x, p] : merged) out.push_back({x, p});
    return out;
}

}  // namespace detail

EmpiricalDiscrete from_samples(std::vector<double> xs)
{
    if (xs.empty()) throw DomainError("from_samples: empty sample");
    for (double x : xs) {
        if (!std::isfinite(x)) throw DomainError("from_samples: non-finite sample");
    }
    std::sort(xs.begin(), xs.end());
    EmpiricalDiscrete e;
    const double n = static_cast<double>(xs.size());
    std::size_t i = 0;
    std::size_t seen = 0;
    while (i < xs.size()) {
        std::size_t j = i;
        while (j < xs.size() && xs[j] == xs[i]) ++j;
        e.points.push_back(xs[i]);
        e.probs.push_back(static_cast<double>(j - i) / n);
        seen += j - i;
        e.cumulative.push_back(static_cast<double>(seen) / n);
        i = j;
    }
    return e;
}

Distribution discrete(const EmpiricalDiscrete& e)
{
    if (e.points.size() != e.probs.size() || e.points.empty()) {
        throw DomainError("discrete: points and probs must be nonempty and of equal length");
    }
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < e.points.size(); ++i) atoms.push_back({e.points[i], e.probs[i]});
    return discrete(std::move(atoms));
}

Distribution discrete(std::vector<Atom> atoms)
{
    auto norm = detail::normalize_atoms(std::move(atoms));
    FamilyTag tag{Family::empirical, {}, "empirical(" + std::to_string(norm.size()) + " atoms)"};
    if (norm.size() == 1) tag = {Family::degenerate, {norm[0].x}, "degenerate(" + detail::fmt(norm[0].x) + ")"};
    return Distribution(std::make_shared<detail::DiscreteModel>(std::move(norm), std::move(tag)));
}

// ---------------------------------------------------------------------------
// Callback-defined continuous laws

namespace detail {

double bisect_quantile(const std::function<double(double)>& cdf, const std::function<double(double)>& sf, double u,
                       double v, SupportInterval s)
{
    if (u <= 0.0) return s.l;
    if (v <= 0.0) return s.r;
    const bool lower = u <= 0.5;
    // Find a finite bracket [a, b] with G(a) <= target < G(b) where G is F
    // (lower half) or -F̄ (upper half).
    auto below = [&](double x) { return lower ? cdf(x) <= u : sf(x) >= v; };
    double a = s.l;
    double b = s.r;
    if (std::isinf(a)) {
        double step = 1.0;
        a = std::isfinite(b) ? b - step : -step;
        while (!below(a)) {
            step *= 2.0;
            a = (std::isfinite(b) ? b : 0.0) - step;
            if (step > 1e300) return -kInf;
        }
    }
    if (std::isinf(b)) {
        double step = 1.0;
        b = a + step;
        while (below(b)) {
            step *= 2.0;
            b = a + step;
            if (step > 1e300) return kInf;
        }
    }
    for (int i = 0; i < 2000; ++i) {
        const double m = 0.5 * (a + b);
        if (!(m > a && m < b)) break;
        if (below(m)) {
            a = m;
        } else {
            b = m;
        }
    }
    return b;
}

}  // namespace detail

namespace {

class CallbackModel final : public DistributionModel {
public:
    explicit CallbackModel(ContinuousSpec s) : s_(std::move(s))
    {
        if (!s_.cdf) throw DomainError("continuous: cdf callback is required");
        if (!(s_.support.l < s_.support.r)) throw DomainError("continuous: support must satisfy l < r");
        if (!s_.sf) {
            auto c = s_.cdf;
            s_.sf = [c](double x) { return 1.0 - c(x); };
        }
    }

    double cdf(double x) const override
    {
        if (x <= s_.support.l) return 0.0;
        if (x >= s_.support.r) return 1.0;
        return std::clamp(s_.cdf(x), 0.0, 1.0);
    }
    double sf(double x) const override
    {
        if (x <= s_.support.l) return 1.0;
        if (x >= s_.support.r) return 0.0;
        return std::clamp(s_.sf(x), 0.0, 1.0);
    }
    double quantile(double u) const override { return solve(u, 1.0 - u); }
    double quantile_upper(double q) const override { return solve(1.0 - q, q); }
    bool has_pdf() const override { return static_cast<bool>(s_.pdf); }
    double pdf(double x) const override
    {
        if (!s_.pdf) return DistributionModel::pdf(x);
        if (x < s_.support.l || x > s_.support.r) return 0.0;
        return s_.pdf(x);
    }
    double quantile_density(double u, double v) const override { return pdf(solve(u, v)); }
    std::optional<double> mean() const override { return s_.mean; }
    SupportInterval support() const override { return s_.support; }
    FamilyTag tag() const override { return {Family::custom, {}, s_.label}; }

private:
    double solve(double u, double v) const
    {
        return detail::bisect_quantile([this](double x) { return cdf(x); }, [this](double x) { return sf(x); }, u, v,
                                       s_.support);
    }

    ContinuousSpec s_;
};

}  // namespace

Distribution continuous(ContinuousSpec spec)
{
    return Distribution(std::make_shared<CallbackModel>(std::move(spec)));
}

}  // namespace cigf
