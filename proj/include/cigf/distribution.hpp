#pragma once

// Univariate laws: parametric families, empirical laws and the
// affine / proportional-hazard / reversed-hazard / equilibrium transforms.

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cigf/numerics.hpp"

namespace cigf {

struct SupportInterval {
    double l = 0.0;
    double r = 1.0;

    bool bounded() const;
    double width() const { return r - l; }
    bool same_as(const SupportInterval& o, double slack = 1e-12) const;
};

enum class Family {
    bernoulli,
    uniform,
    power,
    exponential,
    laplace,
    erlang2,
    degenerate,
    empirical,
    custom,
    transformed,
};

struct FamilyTag {
    Family family = Family::custom;
    std::vector<double> params;
    std::string label;  // human readable, e.g. "exponential(1.5)"
};

/// Atom of a discrete law.
struct Atom {
    double x;
    double p;
};

/// Interface every law implements. Quantile functions must accept u in [0,1].
class DistributionModel {
public:
    virtual ~DistributionModel() = default;

    virtual double cdf(double x) const = 0;
    virtual double sf(double x) const = 0;
    /// Right-continuous inverse sup{x : F(x) <= u}, clamped to the support.
    virtual double quantile(double u) const = 0;
    /// x with F̄(x) = q; accurate for small q where 1 - q loses digits.
    virtual double quantile_upper(double q) const { return quantile(1.0 - q); }

    virtual bool has_pdf() const { return false; }
    virtual double pdf(double x) const;
    /// f(F^-1(u)) with v = 1 - u passed exactly.
    virtual double quantile_density(double u, double v) const;

    virtual bool has_mgf() const { return false; }
    /// Moment generating function; +inf where it diverges.
    virtual double mgf(double s) const;

    virtual std::optional<double> mean() const { return std::nullopt; }
    virtual SupportInterval support() const = 0;
    virtual FamilyTag tag() const = 0;

    /// Non-null for discrete laws: sorted atoms with positive mass.
    virtual const std::vector<Atom>* atoms() const { return nullptr; }
};

class Distribution {
public:
    explicit Distribution(std::shared_ptr<const DistributionModel> model);

    double cdf(double x) const { return m_->cdf(x); }
    double sf(double x) const { return m_->sf(x); }
    double quantile(double u) const;
    double quantile_upper(double q) const;
    bool has_pdf() const { return m_->has_pdf(); }
    double pdf(double x) const { return m_->pdf(x); }
    double quantile_density(double u, double v) const { return m_->quantile_density(u, v); }
    bool has_mgf() const { return m_->has_mgf(); }
    double mgf(double s) const { return m_->mgf(s); }
    std::optional<double> mean() const { return m_->mean(); }
    SupportInterval support() const { return m_->support(); }
    FamilyTag tag() const { return m_->tag(); }
    Family family() const { return m_->tag().family; }
    std::string label() const { return m_->tag().label; }
    const std::vector<Atom>* atoms() const { return m_->atoms(); }
    bool is_discrete() const { return m_->atoms() != nullptr; }
    bool is_degenerate() const;

    /// Cumulative hazard Λ(x) = -log F̄(x).
    double cumulative_hazard(double x) const;
    /// Reversed counterpart T(x) = -log F(x).
    double reversed_hazard_integral(double x) const;

    /// Inverse-transform draw.
    double sample(std::mt19937_64& rng) const;

    const DistributionModel& model() const { return *m_; }

private:
    std::shared_ptr<const DistributionModel> m_;
};

/// 53-bit uniform on [0,1) from a 64-bit engine.
double uniform01(std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Families

Distribution bernoulli(double p);
Distribution uniform(double l, double r);
Distribution power(double theta);
Distribution exponential(double lambda);
/// Laplace with location 0 and scale lambda.
Distribution laplace(double lambda);
/// Erlang with shape 2 and rate lambda.
Distribution erlang2(double lambda);
Distribution degenerate(double c);

/// Dispatch by name: bernoulli, uniform, power, exponential, laplace,
/// erlang2, degenerate.
Distribution make_family(const std::string& name, const std::vector<double>& params);

// ---------------------------------------------------------------------------
// Discrete and user-defined laws

struct EmpiricalDiscrete {
    std::vector<double> points;      // strictly increasing
    std::vector<double> probs;       // positive, sum 1
    std::vector<double> cumulative;  // P_k = p_1 + ... + p_k
};

EmpiricalDiscrete from_samples(std::vector<double> xs);
Distribution discrete(const EmpiricalDiscrete& e);
/// Discrete law from atoms (merged, sorted, normalized check within 1e-12).
Distribution discrete(std::vector<Atom> atoms);

struct ContinuousSpec {
    std::function<double(double)> cdf;
    std::function<double(double)> sf;   // optional, defaults to 1 - cdf
    std::function<double(double)> pdf;  // optional
    SupportInterval support;
    std::optional<double> mean;
    std::string label = "custom";
};

/// Continuous law from callbacks; the quantile is found by bisection.
Distribution continuous(ContinuousSpec spec);

// ---------------------------------------------------------------------------
// Transforms

/// Law of gamma X + delta.
Distribution affine(const Distribution& x, double gamma, double delta);
/// Survival function raised to gamma.
Distribution prop_hazard(const Distribution& x, double gamma);
/// Distribution function raised to theta.
Distribution prop_rev_hazard(const Distribution& x, double theta);
/// Law with density F̄(x) / E[X] on (0, r); X must be nonnegative.
Distribution equilibrium(const Distribution& x, const QuadSpec& spec = {});

/// Odds F̄(x) / F(x) for x inside the open support.
double odds(const Distribution& x, double at);

}  // namespace cigf
