#pragma once

// Cumulative information generating function G_X(alpha, beta) and the
// quantities built directly on it.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cigf/distribution.hpp"
#include "cigf/numerics.hpp"

namespace cigf {

struct ParamPair {
    double alpha = 1.0;
    double beta = 1.0;

    ParamPair swapped() const { return {beta, alpha}; }
};

enum class Method { closed_form, quadrature, series, monte_carlo };

const char* method_name(Method m);

struct MeasureReport {
    double value = 0.0;
    double err_est = 0.0;
    Method method = Method::quadrature;
    std::map<std::string, std::string> meta;
};

enum class DomainStatus { inside, outside, undetermined };

const char* domain_status_name(DomainStatus s);

/// Membership of (alpha, beta) in the finiteness domain for the built-in
/// families; undetermined for transformed and user-defined laws.
DomainStatus in_domain(const Distribution& x, ParamPair p);

/// Closed form of G_X for the families that have one, else nullopt.
/// Does not check the domain.
std::optional<double> cigf_closed_form(const Distribution& x, ParamPair p);

struct CigfOptions {
    enum class Path { automatic, closed_form, quadrature, series };
    Path path = Path::automatic;
    /// Also run quadrature next to a closed form / series and record both in meta.
    bool cross_check = false;
};

MeasureReport cigf(const Distribution& x, ParamPair p, const QuadSpec& spec = {}, const CigfOptions& opts = {});

/// Erlang(2, lambda) series in n of binom(alpha,n)(-1)^n Gamma(n+beta+1, n+beta)
/// e^(n+beta) (n+beta)^-(n+beta+1) / lambda. Terminates for integer alpha >= 0.
MeasureReport cigf_erlang_series(double lambda, ParamPair p, const QuadSpec& spec = {});

/// H_X(alpha) = G_X(alpha, 0).
MeasureReport h_measure(const Distribution& x, double alpha, const QuadSpec& spec = {});
/// K_X(beta) = G_X(0, beta).
MeasureReport k_measure(const Distribution& x, double beta, const QuadSpec& spec = {});

/// int (F̄/F)^beta dx = G_X(-beta, beta).
MeasureReport cigf_odds(const Distribution& x, double beta, const QuadSpec& spec = {});

/// lhs = G of gamma X + delta; rhs = gamma G_X(p) (gamma > 0) or |gamma| G_X(swapped p).
std::pair<MeasureReport, MeasureReport> cigf_affine_check(const Distribution& x, double gamma, double delta,
                                                          ParamPair p, const QuadSpec& spec = {});

/// Monte Carlo of B(alpha+1, beta+1) E[1 / f(F^-1(Y))], Y ~ Beta(alpha+1, beta+1).
MeasureReport cigf_beta_representation(const Distribution& x, ParamPair p, std::int64_t n_mc, std::uint64_t seed);

/// sum_n binom(alpha,n)(-1)^n E[X]^(n+beta) IG_{X_e}(n+beta) with each Golomb
/// term integrated numerically over the equilibrium law X_e.
MeasureReport cigf_equilibrium_series(const Distribution& x, ParamPair p, const QuadSpec& spec = {});

}  // namespace cigf
