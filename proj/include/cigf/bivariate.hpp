#pragma once

// Two-dimensional CIGF over S = {F F̄ > 0}, joint cumulative entropies and
// their recovery from the CIGF.

#include <functional>
#include <string>
#include <utility>

#include "cigf/cigf.hpp"
#include "cigf/entropy.hpp"
#include "cigf/monte_carlo.hpp"

namespace cigf {

/// Joint F and F̄ at a point, given the node and its distances to the
/// integration limits (see Gaps2D). The gaps let laws with a vanishing
/// factor on an edge evaluate it without cancellation.
using JointFunction = std::function<double(double x, double y, const Gaps2D& g)>;

class BivariateDistribution {
public:
    enum class Kind { fgm2x2, triangle, sum_density, product };

    /// Four-point law on {0,1}^2 with P(0,0) = P(1,1) = 1/4 + theta, theta in (-1/4, 1/4).
    static BivariateDistribution fgm2x2(double theta);
    /// Uniform on {x, y >= 0, x + y <= 1}.
    static BivariateDistribution triangle_uniform();
    /// Density x + y on the unit square.
    static BivariateDistribution sum_density();
    /// Independent coupling.
    static BivariateDistribution product(const Distribution& x, const Distribution& y);

    Kind kind() const { return kind_; }
    double theta() const { return theta_; }
    const std::string& label() const { return label_; }

    /// F(x, y) and F̄(x, y) at an arbitrary point.
    double cdf(double x, double y) const;
    double sf(double x, double y) const;

    /// S = {F F̄ > 0}.
    const Region2D& region() const { return region_; }
    /// S has zero area (a degenerate factor of a product).
    bool empty() const { return empty_; }
    /// Smallest rectangle holding the support.
    const Region2D& support_rectangle() const { return rect_; }

    const Distribution& marginal_x() const { return mx_; }
    const Distribution& marginal_y() const { return my_; }

    /// F and F̄ evaluated at a quadrature node of `region()`.
    double cdf_at(double x, double y, const Gaps2D& g) const { return cdf_node_(x, y, g); }
    double sf_at(double x, double y, const Gaps2D& g) const { return sf_node_(x, y, g); }

private:
    Kind kind_ = Kind::product;
    double theta_ = 0.0;
    bool empty_ = false;
    std::string label_;
    Region2D region_;
    Region2D rect_;
    Distribution mx_ = uniform(0.0, 1.0);
    Distribution my_ = uniform(0.0, 1.0);
    std::function<double(double, double)> cdf_;
    std::function<double(double, double)> sf_;
    JointFunction cdf_node_;
    JointFunction sf_node_;
};

/// Selector by name: fgm2x2, triangle, sum_density.
BivariateDistribution make_bivariate(const std::string& name, double theta = 0.0);

/// Finiteness of G_(X,Y)(alpha, beta) for the built-in examples; a product is
/// inside when both factors are.
DomainStatus in_domain2(const BivariateDistribution& v, ParamPair p);

/// Closed forms: (1/4+theta)^(alpha+beta) for fgm2x2,
/// 2^alpha B(alpha+1, 2beta+1) B(alpha+1, alpha+2beta+2) for the triangle.
std::optional<double> cigf2_closed_form(const BivariateDistribution& v, ParamPair p);

/// Double integral of F^alpha F̄^beta over S.
MeasureReport cigf2(const BivariateDistribution& v, ParamPair p, const QuadSpec& spec = {},
                    const CigfOptions& opts = {});

/// Uniform points over the bounding box of a bounded S; mean of the
/// integrand times the box area. err_est is 3 standard errors.
MeasureReport cigf2_monte_carlo(const BivariateDistribution& v, ParamPair p, const MonteCarloConfig& mc = {});

/// (G of the independent coupling by 2D quadrature, G_X G_Y).
std::pair<MeasureReport, MeasureReport> cigf2_product_check(const Distribution& x, const Distribution& y, ParamPair p,
                                                            const QuadSpec& spec = {});

/// Where the joint entropies are integrated: the support rectangle
/// (0,r1) x (0,r2) as in their definition, or S itself.
enum class JointRegion { support_rectangle, s_region };

MeasureReport joint_cre(const BivariateDistribution& v, const QuadSpec& spec = {},
                        JointRegion where = JointRegion::support_rectangle);
MeasureReport joint_ce(const BivariateDistribution& v, const QuadSpec& spec = {},
                       JointRegion where = JointRegion::support_rectangle);
MeasureReport joint_cre_n(const BivariateDistribution& v, int n, const QuadSpec& spec = {},
                          JointRegion where = JointRegion::support_rectangle);
MeasureReport joint_ce_n(const BivariateDistribution& v, int n, const QuadSpec& spec = {},
                         JointRegion where = JointRegion::support_rectangle);
MeasureReport joint_cre_frac(const BivariateDistribution& v, double nu, const QuadSpec& spec = {},
                             JointRegion where = JointRegion::support_rectangle);
MeasureReport joint_ce_frac(const BivariateDistribution& v, double nu, const QuadSpec& spec = {},
                            JointRegion where = JointRegion::support_rectangle);

/// (direct over S, recovered from derivatives of cigf2 at (0,1) or (1,0)).
/// Integer orders use central differences with one Richardson step,
/// non-integer orders the Caputo derivative.
std::pair<MeasureReport, MeasureReport> joint_recovery_check(const BivariateDistribution& v, EntropyKind which,
                                                             double order, const QuadSpec& spec = {},
                                                             const CigfOptions& opts = {});

/// Both sides of the independence identities
///   CE(X,Y)  = [r2 - E Y] CE(X) + [r1 - E X] CE(Y)
///   CRE(X,Y) = [E Y - l2] CRE(X) + [E X - l1] CRE(Y)
/// with the joint side integrated over the support rectangle.
struct IndependenceIdentity {
    EntropyKind kind = EntropyKind::cre;
    double joint = 0.0;
    double from_marginals = 0.0;
};

IndependenceIdentity independence_identity(const BivariateDistribution& v, EntropyKind kind,
                                           const QuadSpec& spec = {});

/// Double integral of (F̄/F)^beta over S, i.e. G_(X,Y)(-beta, beta).
MeasureReport odds2(const BivariateDistribution& v, double beta, const QuadSpec& spec = {},
                    const CigfOptions& opts = {});

}  // namespace cigf
