#pragma once

// Cumulative (residual) entropies from their integral definitions and their
// recovery from the CIGF by integer and fractional differentiation.

#include "cigf/cigf.hpp"
#include "cigf/distribution.hpp"
#include "cigf/numerics.hpp"

namespace cigf {

enum class EntropyKind {
    cre,  // residual: integrand in F̄, recovered from beta-derivatives
    ce,   // cumulative: integrand in F, recovered from alpha-derivatives
};

const char* entropy_kind_name(EntropyKind k);

/// -int F̄ log F̄
MeasureReport cre(const Distribution& x, const QuadSpec& spec = {});
/// -int F log F
MeasureReport ce(const Distribution& x, const QuadSpec& spec = {});
/// (1/n!) int F̄ (-log F̄)^n, n >= 0
MeasureReport cre_n(const Distribution& x, int n, const QuadSpec& spec = {});
/// (1/n!) int F (-log F)^n, n >= 1
MeasureReport ce_n(const Distribution& x, int n, const QuadSpec& spec = {});
/// (1/Gamma(nu+1)) int F̄ (-log F̄)^nu, nu >= 0
MeasureReport cre_frac(const Distribution& x, double nu, const QuadSpec& spec = {});
/// (1/Gamma(nu+1)) int F (-log F)^nu, nu > 0
MeasureReport ce_frac(const Distribution& x, double nu, const QuadSpec& spec = {});

/// Direct evaluation dispatching on kind and a real order (integer orders use
/// the factorial form).
MeasureReport entropy_direct(const Distribution& x, EntropyKind kind, double order, const QuadSpec& spec = {});

/// Options for the derivative-based recovery paths.
struct RecoveryOptions {
    CigfOptions cigf;
    /// <= 0 selects default_diff_step(order).
    double step = 0.0;
};

/// -dG/dbeta at (0,1).
MeasureReport cre_from_cigf(const Distribution& x, const QuadSpec& spec = {}, const RecoveryOptions& ro = {});
/// -dG/dalpha at (1,0).
MeasureReport ce_from_cigf(const Distribution& x, const QuadSpec& spec = {}, const RecoveryOptions& ro = {});
/// ((-1)^n/n!) d^n G/dbeta^n at (0,1), 1 <= n <= 4.
MeasureReport cre_n_from_cigf(const Distribution& x, int n, const QuadSpec& spec = {}, const RecoveryOptions& ro = {});
/// ((-1)^n/n!) d^n G/dalpha^n at (1,0), 1 <= n <= 4.
MeasureReport ce_n_from_cigf(const Distribution& x, int n, const QuadSpec& spec = {}, const RecoveryOptions& ro = {});
/// (1/Gamma(nu+1)) times the right-sided Caputo derivative of beta -> G(0, beta) at 1.
MeasureReport cre_frac_from_cigf(const Distribution& x, double nu, const FracDiffSpec& fd = {},
                                 const QuadSpec& spec = {}, const RecoveryOptions& ro = {});
/// Same for alpha -> G(alpha, 0) at 1.
MeasureReport ce_frac_from_cigf(const Distribution& x, double nu, const FracDiffSpec& fd = {},
                                const QuadSpec& spec = {}, const RecoveryOptions& ro = {});

/// Recovery from the one-argument marginals: K_X for cre, H_X for ce.
/// Integer `order` uses finite differences, non-integer the Caputo derivative.
MeasureReport marginal_recovery(const Distribution& x, EntropyKind kind, double order, const QuadSpec& spec = {},
                                const RecoveryOptions& ro = {});

/// Golomb's information generating function int f(x)^nu dx.
MeasureReport golomb_ig(const Distribution& x, double nu, const QuadSpec& spec = {});

}  // namespace cigf
