#pragma once

// Chernoff, Bernoulli, Minkowski and Hölder bounds on the CIGF and a
// verification report that checks them against computed values.

#include <optional>
#include <string>
#include <vector>

#include "cigf/cigf.hpp"

namespace cigf {

enum class BoundSide { upper, lower };

struct ChernoffBound {
    double bound = 0.0;
    BoundSide side = BoundSide::upper;
};

/// g(r; alpha, beta, s) M(s1)^alpha M(s2)^beta with s1 < 0 < s2. X must be
/// nonnegative; `r` defaults to the right end of the support. (alpha, beta)
/// >= 0 gives an upper bound, <= 0 a lower bound. With r = inf,
/// alpha s1 + beta s2 > 0 is required.
ChernoffBound chernoff_bound(const Distribution& x, ParamPair p, double s1, double s2,
                             std::optional<double> r = std::nullopt);

struct ChernoffSearch {
    ChernoffBound best;
    double s1 = 0.0;
    double s2 = 0.0;
    int admissible = 0;  // grid points that satisfied the preconditions
};

/// Tightest bound over an n x n grid s1 = -s0 i/(n+1), s2 = s0 j/(n+1), where
/// s0 is the MGF radius (capped at `s_cap` for laws with an entire MGF).
ChernoffSearch chernoff_grid(const Distribution& x, ParamPair p, int n = 20, double s_cap = 8.0);

/// Analytic infimum of the Erlang(2, lambda) Chernoff bound for alpha, beta > 0.
double erlang2_chernoff_infimum(double lambda, double beta);

struct BernoulliBounds {
    /// K_X(beta) - alpha K_X(beta+1); set for alpha in [0,1] when K_X is finite there.
    std::optional<double> k_form;
    /// H_X(alpha) - beta H_X(alpha+1); set for beta in [0,1] when H_X is finite there.
    std::optional<double> h_form;

    bool applicable() const { return k_form.has_value() || h_form.has_value(); }
};

BernoulliBounds bernoulli_bounds(const Distribution& x, ParamPair p, const QuadSpec& spec = {});

struct MinkowskiBounds {
    double gamma = 1.0;
    double k_value = 0.0, k_lower = 0.0, k_upper = 0.0;
    double h_value = 0.0, h_lower = 0.0, h_upper = 0.0;
    double g_diag = 0.0;
    std::optional<double> g_diag_upper_via_k;
    std::optional<double> g_diag_upper_via_h;
    /// Lower bounds whose inner difference was negative and clamped to 0.
    std::vector<std::string> clamped;
};

/// Requires a bounded support and gamma >= 1.
MinkowskiBounds minkowski_bounds(const Distribution& x, double gamma, const QuadSpec& spec = {});

/// (r - E X)^theta (E X - l)^(1-theta) for a bounded support, theta in (0,1).
double holder_bound(const Distribution& x, double theta, const QuadSpec& spec = {});

struct BoundCheck {
    std::string name;
    std::string params;
    double value = 0.0;  // the quantity being bounded
    double bound = 0.0;
    BoundSide side = BoundSide::upper;
    double margin = 0.0;  // >= 0 when the inequality holds
    bool pass = true;
    std::string note;
};

struct BoundsReport {
    std::string distribution;
    std::vector<BoundCheck> checks;
    std::vector<std::string> skipped;

    bool all_pass() const;
    int failures() const;
};

inline constexpr double kBoundSlack = 1e-9;

/// Runs every applicable bound over the (alpha, beta) grid, plus Hölder on a
/// theta grid and Minkowski on a gamma grid when the support is bounded.
BoundsReport verify_bounds(const Distribution& x, const std::vector<ParamPair>& grid, const QuadSpec& spec = {});

/// Default grid: {0.5,1,2}^2 plus negative pairs where the domain allows.
std::vector<ParamPair> default_bounds_grid();

}  // namespace cigf
