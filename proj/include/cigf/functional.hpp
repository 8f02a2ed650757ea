#pragma once

// Integrals of the form int phi(F(x), F̄(x)) dx over the support, shared by
// the CIGF, the cumulative entropies and the distorted Gini functions.

#include <functional>
#include <string>

#include "cigf/distribution.hpp"
#include "cigf/numerics.hpp"

namespace cigf {

/// phi(F, F̄); both arguments are passed so neither is formed as 1 - other.
using CdfIntegrand = std::function<double(double f, double fbar)>;

enum class FunctionalForm {
    sum,       // discrete law: exact finite sum over atom gaps
    quantile,  // u = F(x): int_0^1 phi(u, 1-u) / f(F^-1(u)) du
    x_space,   // direct integral in x, truncated at tail quantiles if unbounded
};

const char* form_name(FunctionalForm f);

struct FunctionalResult {
    QuadResult q;
    FunctionalForm form = FunctionalForm::sum;
};

FunctionalResult cdf_functional(const Distribution& x, const CdfIntegrand& phi, const QuadSpec& spec);

enum class Endpoint { none, lower, upper };

/// Looks at the quantile-form integrand near u = 0 and u = 1 and reports an
/// end where it decays no faster than 1/u (a non-integrable singularity).
/// Only laws with a density are probed.
Endpoint probe_divergence(const Distribution& x, const CdfIntegrand& phi);

}  // namespace cigf
