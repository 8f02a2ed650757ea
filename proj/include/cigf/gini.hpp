#pragma once

// Distorted Gini functions, the variability-measure properties and the
// dispersive-order comparisons built on them.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cigf/cigf.hpp"
#include "cigf/monte_carlo.hpp"

namespace cigf {

/// Nondecreasing map of [0,1] onto [0,1] with q(0) = 0 and q(1) = 1.
class Distortion {
public:
    enum class Kind { identity, power, callback };

    static Distortion identity();
    /// u^a for a >= 0; a = 0 is the step 1{u > 0}.
    static Distortion power(double a);
    /// Validated on a 1001-point grid; throws DomainError on failure.
    static Distortion callback(std::function<double(double)> q, std::string label = "custom");

    double operator()(double u) const;
    Kind kind() const { return kind_; }
    double exponent() const { return a_; }
    const std::string& label() const { return label_; }

private:
    Kind kind_ = Kind::identity;
    double a_ = 1.0;
    std::function<double(double)> fn_;
    std::string label_ = "id";
};

struct DistortionPair {
    Distortion q1 = Distortion::identity();
    Distortion q2 = Distortion::identity();

    static DistortionPair identity() { return {}; }
    static DistortionPair powers(double a, double b) { return {Distortion::power(a), Distortion::power(b)}; }
    /// Both components are power distortions; their exponents as a ParamPair.
    std::optional<ParamPair> as_params() const;
    std::string label() const;
};

/// int q1(F) q2(F̄) dx over the support.
MeasureReport q_gini(const Distribution& x, const DistortionPair& q, const QuadSpec& spec = {});

/// int over the common support of q1(F) q2(F̄) dF_T.
MeasureReport weighted_q_gini(const Distribution& x, const DistortionPair& q, const Distribution& t,
                              const QuadSpec& spec = {});

/// Monte Carlo of (1/2) E[F_T(max(X,X')) - F_T(min(X,X'))].
MeasureReport mean_value_repr(const Distribution& x, const Distribution& t, const MonteCarloConfig& mc = {});

enum class Tri { holds, fails, undetermined };

const char* tri_name(Tri t);

/// X <=_d Y on a u-grid: f(F^-1(u)) >= g(G^-1(u)) when both have densities,
/// otherwise quantile differences of X no larger than those of Y.
/// "fails" needs a violation beyond 1e-9 (relative).
Tri dispersive_check(const Distribution& x, const Distribution& y, int grid_size = 400);

struct GiniCheck {
    std::string name;
    bool applicable = true;
    bool pass = true;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string note;
};

struct GiniReport {
    std::vector<GiniCheck> checks;

    /// True when every applicable check passes.
    bool all_pass() const;
};

/// Translation invariance, positive homogeneity, zero on degenerates,
/// nonnegativity, and monotonicity in the dispersive order. The last one uses
/// `asserted_dispersive` when given, otherwise dispersive_check.
GiniReport variability_axioms_check(const Distribution& x, const Distribution& y, const DistortionPair& q,
                                    const QuadSpec& spec = {}, std::optional<bool> asserted_dispersive = std::nullopt);

/// Ordering of weighted q-Gini functions when f_T is monotone with the
/// matching common endpoint and X <=_d Y. Reports "not applicable" otherwise.
GiniReport weighted_ordering_check(const Distribution& x, const Distribution& y, const Distribution& t,
                                   const DistortionPair& q, const QuadSpec& spec = {});

/// R^X_{k,n} <= R^Y_{k,n} for 0 <= k <= n under the same hypotheses.
GiniReport rkn_comparison(const Distribution& x, const Distribution& y, const Distribution& t, int n,
                          const QuadSpec& spec = {});

}  // namespace cigf
