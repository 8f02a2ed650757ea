#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "cigf/errors.hpp"
#include "cigf/numerics.hpp"

namespace cigf {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kMaxTanhSinhLevel = 7;
constexpr double kTanhSinhTmax = 6.5;

struct Panel {
    double a;
    double b;
    double value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

// Integration problem on a finite interval [lo, hi]; the integrand always
// receives exact gaps to lo and hi.
class FiniteProblem {
public:
    FiniteProblem(const GapIntegrand& f, double lo, double hi, bool distinct_x)
        : f_(f), lo_(lo), hi_(hi), distinct_x_(distinct_x) {}

    double eval(double x, double lo_gap, double hi_gap) const
    {
        const double v = f_(x, lo_gap, hi_gap);
        return v;
    }

    Panel gauss_kronrod(double a, double b) const
    {
        const double c = 0.5 * (a + b);
        const double hw = 0.5 * (b - a);
        const double fc = eval(c, c - lo_, hi_ - c);
        double resk = fc * kWgk[7];
        double resg = fc * kWg[3];
        double resabs = std::fabs(resk);
        std::array<double, 7> f1{};
        std::array<double, 7> f2{};
        for (int j = 0; j < 7; ++j) {
            const double dx = hw * kXgk[j];
            const double xl = c - dx;
            const double xr = c + dx;
            f1[j] = eval(xl, (c - lo_) - dx, (hi_ - c) + dx);
            f2[j] = eval(xr, (c - lo_) + dx, (hi_ - c) - dx);
            resk += kWgk[j] * (f1[j] + f2[j]);
            resabs += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
            if (j % 2 == 1) resg += kWg[j / 2] * (f1[j] + f2[j]);
        }
        const double mean = 0.5 * resk;
        double resasc = kWgk[7] * std::fabs(fc - mean);
        for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));
        resk *= hw;
        resasc *= std::fabs(hw);
        resabs *= std::fabs(hw);
        double err = std::fabs((resk - resg * hw));
        if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
        if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(err, 50.0 * kEps * resabs);
        if (!std::isfinite(resk)) {
            throw DomainError("integrate_1d: integrand is not finite on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]");
        }
        return {a, b, resk, err};
    }

    // Tanh-sinh rule on [a, b], refined level by level until two successive
    // levels agree to `target` or the level cap is reached.
    Panel tanh_sinh(double a, double b, double target) const
    {
        const double hw = 0.5 * (b - a);
        const double c = 0.5 * (a + b);
        const double pi2 = 0.5 * std::numbers::pi;

        double sum = eval(c, c - lo_, hi_ - c) * pi2;  // k = 0 node, weight pi/2
        double h = 1.0;
        auto add_node = [&](double t) {
            const double u = pi2 * std::sinh(t);
            const double e = std::exp(-2.0 * u);
            const double comp = 2.0 * e / (1.0 + e);  // 1 - tanh(u)
            const double gap = hw * comp;
            if (!(gap > 0.0)) return 0.0;
            const double weight = pi2 * std::cosh(t) * comp * (2.0 - comp);
            double contrib = 0.0;
            // node near a
            {
                const double x = a + gap;
                if (!(distinct_x_ && x <= a)) {
                    const double v = eval(x, (a - lo_) + gap, (hi_ - a) - gap);
                    contrib += checked(v, weight, x);
                }
            }
            // node near b
            {
                const double x = b - gap;
                if (!(distinct_x_ && x >= b)) {
                    const double v = eval(x, (b - lo_) - gap, (hi_ - b) + gap);
                    contrib += checked(v, weight, x);
                }
            }
            return contrib;
        };

        for (double t = h; t <= kTanhSinhTmax; t += h) sum += add_node(t);
        double prev = sum * h * hw;
        double cur = prev;
        double err = std::fabs(cur);
        for (int level = 1; level <= kMaxTanhSinhLevel; ++level) {
            h *= 0.5;
            for (double t = h; t <= kTanhSinhTmax; t += 2.0 * h) sum += add_node(t);
            cur = sum * h * hw;
            err = std::fabs(cur - prev);
            if (level >= 3 && err <= target) break;
            prev = cur;
        }
        if (!std::isfinite(cur)) {
            throw DomainError("integrate_1d: integrand is not finite near [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]");
        }
        err = std::max(err, 50.0 * kEps * std::fabs(cur));
        return {a, b, cur, err};
    }

    QuadResult run(const QuadSpec& spec) const
    {
        spec.validate();
        if (!(hi_ > lo_)) {
            if (hi_ == lo_) return {0.0, 0.0};
            throw DomainError("integrate_1d: requires lo < hi");
        }
        auto rule = [&](double a, double b, double target) {
            if (a == lo_ || b == hi_) return tanh_sinh(a, b, target);
            return gauss_kronrod(a, b);
        };

        std::priority_queue<Panel> active;
        std::vector<Panel> frozen;
        const double first_target = 0.1 * std::max(spec.abs_tol, 0.0);
        active.push(rule(lo_, hi_, first_target));
        int panels = 1;

        while (true) {
            double total = 0.0;
            double err = 0.0;
            {
                auto copy = active;
                while (!copy.empty()) {
                    total += copy.top().value;
                    err += copy.top().err;
                    copy.pop();
                }
            }
            double frozen_err = 0.0;
            for (const auto& p : frozen) {
                total += p.value;
                frozen_err += p.err;
            }
            const double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(total));
            if (err + frozen_err <= tol) return {total, err + frozen_err};
            if (active.empty() || err <= 0.1 * tol) {
                throw AccuracyError("integrate_1d: round-off limits the attainable accuracy", total,
                                    err + frozen_err);
            }
            if (panels >= spec.max_subdiv) {
                throw AccuracyError("integrate_1d: max_subdiv exhausted without convergence", total,
                                    err + frozen_err);
            }

            Panel worst = active.top();
            active.pop();
            const double mid = 0.5 * (worst.a + worst.b);
            if (!(mid > worst.a && mid < worst.b) ||
                (worst.b - worst.a) <= 16.0 * kEps * std::max(std::fabs(worst.a), std::fabs(worst.b))) {
                frozen.push_back(worst);
                continue;
            }
            const double child_target = 0.05 * tol;
            active.push(rule(worst.a, mid, child_target));
            active.push(rule(mid, worst.b, child_target));
            ++panels;
        }
    }

private:
    static double checked(double v, double weight, double x)
    {
        if (std::isfinite(v)) return v * weight;
        if (weight < 1e-20) return 0.0;
        throw DomainError("integrate_1d: integrand is not finite at x = " + std::to_string(x));
    }

    const GapIntegrand& f_;
    double lo_;
    double hi_;
    bool distinct_x_;
};

QuadResult integrate_finite(const GapIntegrand& f, double lo, double hi, const QuadSpec& spec, bool distinct_x)
{
    return FiniteProblem(f, lo, hi, distinct_x).run(spec);
}

// Maps (lo, +inf) onto (0, 1) with x = lo + s / (1 - s).
QuadResult integrate_upper_infinite(const GapIntegrand& f, double lo, const QuadSpec& spec)
{
    const GapIntegrand mapped = [&](double, double s, double sc) {
        if (!(sc > 0.0)) return 0.0;
        const double gap = s / sc;
        if (!std::isfinite(gap)) return 0.0;
        const double v = f(lo + gap, gap, kInf);
        if (v == 0.0) return 0.0;
        return v / (sc * sc);
    };
    return integrate_finite(mapped, 0.0, 1.0, spec, false);
}

// Maps (-inf, hi) onto (0, 1) with x = hi - s / (1 - s).
QuadResult integrate_lower_infinite(const GapIntegrand& f, double hi, const QuadSpec& spec)
{
    const GapIntegrand mapped = [&](double, double s, double sc) {
        if (!(sc > 0.0)) return 0.0;
        const double gap = s / sc;
        if (!std::isfinite(gap)) return 0.0;
        const double v = f(hi - gap, kInf, gap);
        if (v == 0.0) return 0.0;
        return v / (sc * sc);
    };
    return integrate_finite(mapped, 0.0, 1.0, spec, false);
}

QuadResult integrate_any(const GapIntegrand& f, double lo, double hi, const QuadSpec& spec, bool distinct_x)
{
    if (std::isnan(lo) || std::isnan(hi)) throw DomainError("integrate_1d: NaN limit");
    if (!(lo < hi)) {
        if (lo == hi) return {0.0, 0.0};
        throw DomainError("integrate_1d: requires lo < hi");
    }
    const bool lo_inf = std::isinf(lo);
    const bool hi_inf = std::isinf(hi);
    if (!lo_inf && !hi_inf) return integrate_finite(f, lo, hi, spec, distinct_x);
    if (!lo_inf) return integrate_upper_infinite(f, lo, spec);
    if (!hi_inf) return integrate_lower_infinite(f, hi, spec);
    QuadSpec half = spec;
    half.abs_tol *= 0.5;
    const QuadResult left = integrate_lower_infinite(f, 0.0, half);
    const QuadResult right = integrate_upper_infinite(f, 0.0, half);
    return {left.value + right.value, left.err_est + right.err_est};
}

}  // namespace

QuadResult integrate_1d(const Integrand& f, double lo, double hi, const QuadSpec& spec)
{
    const GapIntegrand g = [&](double x, double, double) { return f(x); };
    return integrate_any(g, lo, hi, spec, true);
}

QuadResult integrate_1d(const GapIntegrand& f, double lo, double hi, const QuadSpec& spec)
{
    return integrate_any(f, lo, hi, spec, false);
}

// ---------------------------------------------------------------------------
// 2D

Region2D Region2D::rectangle(double x_lo, double x_hi, double y_lo, double y_hi)
{
    if (!(x_lo < x_hi) || !(y_lo < y_hi)) throw DomainError("Region2D: empty rectangle");
    return {Shape::rectangle, x_lo, x_hi, y_lo, y_hi};
}

Region2D Region2D::simplex(double x_lo, double x_hi, double y_lo, double y_hi)
{
    if (!(x_lo < x_hi) || !(y_lo < y_hi)) throw DomainError("Region2D: empty simplex");
    if (!std::isfinite(x_hi - x_lo) || !std::isfinite(y_hi - y_lo)) {
        throw DomainError("Region2D: simplex must be bounded");
    }
    return {Shape::simplex, x_lo, x_hi, y_lo, y_hi};
}

double Region2D::y_upper(double x) const
{
    if (shape == Shape::rectangle) return y_hi;
    const double frac = std::clamp((x - x_lo) / (x_hi - x_lo), 0.0, 1.0);
    return y_lo + (y_hi - y_lo) * (1.0 - frac);
}

double Region2D::area() const
{
    const double full = (x_hi - x_lo) * (y_hi - y_lo);
    return shape == Shape::rectangle ? full : 0.5 * full;
}

bool Region2D::contains(double x, double y) const
{
    if (x < x_lo || x > x_hi || y < y_lo) return false;
    return y <= y_upper(x);
}

QuadResult integrate_2d(const Integrand2DGap& f, const Region2D& region, const QuadSpec& spec)
{
    spec.validate();
    const double x_width = region.x_hi - region.x_lo;
    QuadSpec inner = spec;
    inner.rel_tol = 0.1 * spec.rel_tol;
    inner.abs_tol = 0.1 * spec.abs_tol / (std::isfinite(x_width) ? std::max(1.0, x_width) : 1.0);

    double inner_err = 0.0;
    const GapIntegrand section = [&](double x, double x_lo_gap, double x_hi_gap) {
        const double y_top = region.y_upper(x);
        if (!(y_top > region.y_lo)) return 0.0;
        const Gaps2D base{x_lo_gap, x_hi_gap, 0.0, 0.0};
        const GapIntegrand row = [&](double y, double y_lo_gap, double y_hi_gap) {
            Gaps2D g = base;
            g.y_lo = y_lo_gap;
            g.y_hi = y_hi_gap;
            return f(x, y, g);
        };
        QuadResult r;
        try {
            r = integrate_1d(row, region.y_lo, y_top, inner);
        } catch (const AccuracyError& e) {
            r = {e.best_estimate(), e.error_estimate()};
        }
        inner_err = std::max(inner_err, r.err_est);
        return r.value;
    };
    QuadResult outer = integrate_1d(section, region.x_lo, region.x_hi, spec);
    const double spread = std::isfinite(x_width) ? x_width : 1.0;
    outer.err_est += inner_err * spread;
    return outer;
}

QuadResult integrate_2d(const Integrand2D& f, const Region2D& region, const QuadSpec& spec)
{
    const Integrand2DGap g = [&f](double x, double y, const Gaps2D&) { return f(x, y); };
    return integrate_2d(g, region, spec);
}

}  // namespace cigf
