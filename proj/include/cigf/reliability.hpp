#pragma once

// Order statistics, k-out-of-n systems and multi-component stress-strength
// reliability.

#include <vector>

#include "cigf/cigf.hpp"
#include "cigf/monte_carlo.hpp"

namespace cigf {

/// n components with i.i.d. strengths, one common independent stress.
/// The system survives when at least k strengths exceed the stress.
struct SystemSpec {
    int n = 1;
    int k = 1;
    Distribution strength = uniform(0.0, 1.0);
    Distribution stress = uniform(0.0, 1.0);

    void validate() const;
};

/// Law of max(X_1..X_n): F^n.
Distribution max_order_statistic(const Distribution& x, int n);
/// Law of min(X_1..X_n): F̄^n.
Distribution min_order_statistic(const Distribution& x, int n);

/// sum_i (-1)^i binom(beta,i) H_X(n(i+alpha)); G of the sample maximum.
MeasureReport cigf_max_series(const Distribution& x, int n, ParamPair p, const QuadSpec& spec = {});
/// sum_j (-1)^j binom(alpha,j) K_X(n(j+beta)); G of the sample minimum.
MeasureReport cigf_min_series(const Distribution& x, int n, ParamPair p, const QuadSpec& spec = {});

/// E[X_(k:n)] = l + sum_{j<k} C(n,j) G_X(j, n-j).
MeasureReport korn_mean(const Distribution& x, int k, int n, const QuadSpec& spec = {});

/// R_{k,n} = sum_{j>=k} C(n,j) int F̄^j F^(n-j) dF_T, with R_{0,n} = 1.
MeasureReport rkn_general(const SystemSpec& sys, const QuadSpec& spec = {});

/// R_{k,n} for a stress uniform on (l, r), the common support of the strengths:
/// (1/(r-l)) sum_{j>=k} C(n,j) G_X(n-j, j).
MeasureReport rkn_uniform_stress(const Distribution& x, int k, int n, double l, double r, const QuadSpec& spec = {});

/// R_{0,n} .. R_{n,n} from R_{k+1,n} = R_{k,n} - C(n,k) G_X(n-k, k) / (r-l).
std::vector<double> rkn_recurrence(const Distribution& x, int n, double l, double r, const QuadSpec& spec = {});

/// Power(theta) strengths, uniform(0,1) stress:
/// Gamma(n+1) Gamma(n-k+1+1/theta) / (Gamma(n+1+1/theta) Gamma(n-k+1)).
double rkn_power_closed(double theta, int k, int n);

/// Fraction of trials in which at least k of n sampled strengths exceed the
/// sampled stress. err_est = 3 sqrt(R(1-R)/n_trials).
MeasureReport rkn_monte_carlo(const SystemSpec& sys, const MonteCarloConfig& mc = {});
/// The same estimate for every k = 0..n from one set of trials.
std::vector<MeasureReport> rkn_monte_carlo_profile(const Distribution& strength, const Distribution& stress, int n,
                                                   const MonteCarloConfig& mc = {});

struct Figure1Row {
    double theta;
    int k;
    double r;
};

/// R_{k,n} for power(theta) strengths and uniform stress, 0 <= k <= n, per theta.
std::vector<Figure1Row> figure1_data(const std::vector<double>& thetas, int n);

}  // namespace cigf
