#pragma once

// Special functions, adaptive quadrature, series summation and numerical
// differentiation (integer and Caputo fractional order).

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>

namespace cigf {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Tolerances and budgets shared by every quadrature and series evaluation.
struct QuadSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdiv = 2000;
    /// Probability mass allowed outside the truncation window when an
    /// integral over an infinite support has to be cut off in x-space.
    double tail_mass = 1e-12;
    int series_terms_max = 10000;
    double series_tail_tol = 1e-12;

    /// Throws DomainError when a field is out of range.
    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
};

struct SeriesResult {
    double value = 0.0;
    double err_est = 0.0;
    std::size_t n_used = 0;
};

/// Caputo derivative settings. `order` must be positive and non-integer.
/// A non-finite `upper_cutoff` asks caputo_deriv to size the cutoff from the
/// integrand envelope; `inner_step <= 0` selects a default per derivative order.
struct FracDiffSpec {
    double order = 0.5;
    double upper_cutoff = kInf;
    double inner_step = 0.0;

    /// n = floor(order) + 1.
    int integer_order() const;
};

// ---------------------------------------------------------------------------
// Special functions

double log_gamma(double x);
double beta(double x, double y);
/// Non-regularized incomplete beta B(p; x, y) = int_0^p t^(x-1) (1-t)^(y-1) dt.
double incomplete_beta(double p, double x, double y);
/// Gamma(a, x) = int_x^inf t^(a-1) e^(-t) dt.
double upper_incomplete_gamma(double a, double x);
/// log Gamma(a, x); stays finite where Gamma(a, x) overflows.
double log_upper_incomplete_gamma(double a, double x);
/// a (a-1) ... (a-n+1) / n! by the multiplicative recurrence.
double gen_binomial(double a, long n);
/// Number of nonzero terms of k -> gen_binomial(a, k) when a is a
/// nonnegative integer (a + 1), otherwise nullopt.
std::optional<std::size_t> binomial_terms(double a);
/// Integer binomial coefficient C(n, k) as a double.
double binomial(int n, int k);

// ---------------------------------------------------------------------------
// Quadrature

using Integrand = std::function<double(double)>;
/// Integrand that also receives the accurately computed distances to the
/// lower and upper integration limits (x - lo, hi - x). Needed when the
/// integrand is singular at an endpoint and depends on the gap, not on x.
using GapIntegrand = std::function<double(double x, double lo_gap, double hi_gap)>;

/// Adaptive quadrature on (lo, hi); either limit may be infinite. Interior
/// panels use a 7/15-point Gauss-Kronrod pair, panels touching an endpoint
/// use a tanh-sinh rule so integrable algebraic or logarithmic endpoint
/// singularities converge. Throws AccuracyError if max_subdiv is exhausted.
QuadResult integrate_1d(const Integrand& f, double lo, double hi, const QuadSpec& spec);
QuadResult integrate_1d(const GapIntegrand& f, double lo, double hi, const QuadSpec& spec);

struct Region2D {
    enum class Shape { rectangle, simplex };
    Shape shape = Shape::rectangle;
    double x_lo = 0.0, x_hi = 1.0;
    double y_lo = 0.0, y_hi = 1.0;

    static Region2D rectangle(double x_lo, double x_hi, double y_lo, double y_hi);
    /// {(x, y): x >= x_lo, y >= y_lo, (x-x_lo)/(x_hi-x_lo) + (y-y_lo)/(y_hi-y_lo) <= 1}
    static Region2D simplex(double x_lo, double x_hi, double y_lo, double y_hi);

    /// Upper y-limit of the section at x.
    double y_upper(double x) const;
    double area() const;
    bool contains(double x, double y) const;
};

using Integrand2D = std::function<double(double x, double y)>;

/// Distances of a node to the four limits of the nested integration: the
/// outer x-limits and the inner y-limits of the current section (for a
/// simplex, y_hi is the distance to the hypotenuse).
struct Gaps2D {
    double x_lo, x_hi, y_lo, y_hi;
};

using Integrand2DGap = std::function<double(double x, double y, const Gaps2D& gaps)>;

/// Nested adaptive quadrature over a rectangle or a right-angled simplex.
/// The simplex hypotenuse is an exact inner limit, not an indicator.
QuadResult integrate_2d(const Integrand2D& f, const Region2D& region, const QuadSpec& spec);
QuadResult integrate_2d(const Integrand2DGap& f, const Region2D& region, const QuadSpec& spec);

// ---------------------------------------------------------------------------
// Series

/// Sums term(0) + term(1) + ... until two consecutive terms fall below
/// series_tail_tol (relative to max(1, |sum|)). With `exact_terms` the sum is
/// finite and evaluated exactly. err_est is the magnitude of the first omitted
/// term. When the budget runs out on a slowly decaying same-sign tail, an
/// algebraic estimate of the remainder is added to the sum.
/// Non-decaying terms throw AccuracyError.
SeriesResult alternating_series(const std::function<double(std::size_t)>& term, const QuadSpec& spec,
                                std::optional<std::size_t> exact_terms = std::nullopt);

// ---------------------------------------------------------------------------
// Differentiation

/// Plain central difference for orders 1..4.
double central_diff(const std::function<double(double)>& g, double at, int order, double step);
/// Central difference with one Richardson step (h and h/2), error O(h^4).
double richardson_diff(const std::function<double(double)>& g, double at, int order, double step);
/// Default step used by the entropy recovery routines for a derivative order.
double default_diff_step(int order);

/// Right-sided Caputo derivative
///   ((-1)^n / Gamma(n - nu)) int_at^inf g^(n)(t) (t - at)^(n - nu - 1) dt,
/// n = floor(nu) + 1, with the inner derivative taken by richardson_diff.
QuadResult caputo_deriv(const std::function<double(double)>& g, double at, const FracDiffSpec& fd,
                        const QuadSpec& quad);

}  // namespace cigf
