#include "cigf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cigf/bivariate.hpp"
#include "cigf/bounds.hpp"
#include "cigf/entropy.hpp"
#include "cigf/errors.hpp"
#include "cigf/gini.hpp"
#include "cigf/reliability.hpp"

namespace cigf {

namespace {

struct SuiteDef {
    const char* name;
    double budget;
};

const SuiteDef kSuites[] = {
    {"table2", 10.0},       {"erlang", 5.0},       {"gini_identity", 10.0},
    {"entropy", 60.0},      {"bounds", 10.0},      {"reliability", 30.0},
    {"order_stats", 20.0},  {"gini", 30.0},        {"bivariate", 60.0},
};

std::string g17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// Collects comparisons for one criterion. With `inject` set the first
// comparison is corrupted, which the criterion must report.
class Checker {
public:
    Checker(CriterionResult& r, bool inject) : r_(r), inject_(inject) {}

    // |got - want| <= tol, or tol * |want| when relative.
    bool close(const std::string& what, double got, double want, double tol, bool relative = false)
    {
        if (corrupt()) got += 1e-3 * (1.0 + std::fabs(want));
        double err = std::fabs(got - want);
        double lim = relative ? tol * std::fabs(want) : tol;
        bool ok = std::isfinite(got) && err <= lim;
        record(ok, what + ": got " + g17(got) + " want " + g17(want) + " err " + g17(err) + " tol " + g17(lim));
        return ok;
    }

    bool truth(const std::string& what, bool ok)
    {
        if (corrupt()) ok = !ok;
        record(ok, what);
        return ok;
    }

    void note(const std::string& s) { r_.notes.push_back(s); }

    void fail(const std::string& s) { record(false, s); }

private:
    bool corrupt()
    {
        if (!inject_ || injected_) return false;
        injected_ = true;
        return true;
    }

    void record(bool ok, const std::string& what)
    {
        ++r_.checks;
        if (!ok) {
            r_.pass = false;
            r_.failures.push_back(what);
        }
    }

    CriterionResult& r_;
    bool inject_;
    bool injected_ = false;
};

CigfOptions forced(CigfOptions::Path p)
{
    CigfOptions o;
    o.path = p;
    return o;
}

const std::vector<ParamPair>& grid3()
{
    static const std::vector<ParamPair> g = [] {
        std::vector<ParamPair> v;
        for (double a : {0.5, 1.0, 2.0}) {
            for (double b : {0.5, 1.0, 2.0}) v.push_back({a, b});
        }
        return v;
    }();
    return g;
}

std::string pp(ParamPair p) { return "(" + g17(p.alpha) + "," + g17(p.beta) + ")"; }

// ---------------------------------------------------------------------------

void table2(Checker& c, const VerifyOptions& o)
{
    const std::vector<Distribution> fams{uniform(1.0, 3.0), power(2.0), exponential(2.0), laplace(1.5), bernoulli(0.3)};
    auto quad = forced(CigfOptions::Path::quadrature);
    for (const auto& x : fams) {
        for (ParamPair p : grid3()) {
            if (in_domain(x, p) == DomainStatus::outside) continue;
            auto cf = cigf_closed_form(x, p);
            if (!cf) {
                c.fail(x.label() + " " + pp(p) + ": no closed form");
                continue;
            }
            c.close(x.label() + " " + pp(p), cigf::cigf(x, p, o.spec, quad).value, *cf, 1e-8, true);
        }
    }
}

void erlang(Checker& c, const VerifyOptions& o)
{
    auto quad = forced(CigfOptions::Path::quadrature);
    for (double lambda : {1.0, 2.0}) {
        for (ParamPair p : {ParamPair{1, 1}, ParamPair{2, 1}, ParamPair{1, 0.5}}) {
            double s = cigf_erlang_series(lambda, p, o.spec).value;
            double q = cigf::cigf(erlang2(lambda), p, o.spec, quad).value;
            c.close("erlang2(" + g17(lambda) + ") " + pp(p) + " series vs quadrature", s, q, 1e-6);
        }
    }
}

void gini_identity(Checker& c, const VerifyOptions& o)
{
    struct Case {
        Distribution x;
        double exact;
    };
    const std::vector<Case> cases{{exponential(1.0), 0.5}, {uniform(0.0, 1.0), 1.0 / 6.0}, {power(2.0), 2.0 / 15.0}};
    for (const auto& k : cases) {
        double g = cigf::cigf(k.x, {1, 1}, o.spec).value;
        c.close(k.x.label() + " G(1,1) exact", g, k.exact, 1e-9);
        auto acc = run_monte_carlo(o.mc, [&](std::mt19937_64& rng) {
            return 0.5 * std::fabs(k.x.sample(rng) - k.x.sample(rng));
        });
        c.close(k.x.label() + " half mean |X-X'| within 3 sigma", acc.mean(), g, 3.0 * acc.std_error());
    }
}

void entropy(Checker& c, const VerifyOptions& o)
{
    const Distribution e = exponential(1.0), u = uniform(0.0, 1.0);
    auto tol_int = [](double d) { return 1e-4 * (1.0 + std::fabs(d)); };

    for (const Distribution* x : {&e, &u}) {
        const std::string lab = x->label();
        // residual side
        double d1 = cre(*x, o.spec).value;
        c.close(lab + " CRE from G", cre_from_cigf(*x, o.spec).value, d1, tol_int(d1));
        c.close(lab + " CRE from K", marginal_recovery(*x, EntropyKind::cre, 1.0, o.spec).value, d1, tol_int(d1));
        double d2 = cre_n(*x, 2, o.spec).value;
        c.close(lab + " CRE_2 from G", cre_n_from_cigf(*x, 2, o.spec).value, d2, tol_int(d2));
        c.close(lab + " CRE_2 from K", marginal_recovery(*x, EntropyKind::cre, 2.0, o.spec).value, d2, tol_int(d2));
        for (double nu : {0.5, 1.5}) {
            double d = cre_frac(*x, nu, o.spec).value;
            FracDiffSpec fd;
            fd.order = nu;
            c.close(lab + " CRE_" + g17(nu) + " from G", cre_frac_from_cigf(*x, nu, fd, o.spec).value, d, 1e-3);
            if (x == &e) c.close(lab + " CRE_" + g17(nu) + " equals 1", d, 1.0, 1e-8);
        }
        if (x == &e) {
            c.close(lab + " CRE_1 equals 1", d1, 1.0, 1e-8);
            c.close(lab + " CRE_2 equals 1", d2, 1.0, 1e-8);
            c.note(lab + ": CE recovery not applicable, (1,0) is outside the finiteness domain");
            continue;
        }
        // cumulative side
        double c1 = ce(*x, o.spec).value;
        c.close(lab + " CE from G", ce_from_cigf(*x, o.spec).value, c1, tol_int(c1));
        c.close(lab + " CE from H", marginal_recovery(*x, EntropyKind::ce, 1.0, o.spec).value, c1, tol_int(c1));
        double c2 = ce_n(*x, 2, o.spec).value;
        c.close(lab + " CE_2 from G", ce_n_from_cigf(*x, 2, o.spec).value, c2, tol_int(c2));
        for (double nu : {0.5, 1.5}) {
            double d = ce_frac(*x, nu, o.spec).value;
            FracDiffSpec fd;
            fd.order = nu;
            c.close(lab + " CE_" + g17(nu) + " from G", ce_frac_from_cigf(*x, nu, fd, o.spec).value, d, 1e-3);
        }
    }
}

void bounds(Checker& c, const VerifyOptions& o)
{
    const std::vector<Distribution> fams{bernoulli(0.3), uniform(0.0, 1.0), power(2.0),
                                         exponential(1.0), laplace(1.0), erlang2(1.0)};
    for (const auto& x : fams) {
        auto rep = verify_bounds(x, default_bounds_grid(), o.spec);
        std::string worst;
        for (const auto& b : rep.checks) {
            if (!b.pass) worst += " " + b.name + b.params + " margin " + g17(b.margin);
        }
        c.truth(x.label() + ": " + std::to_string(rep.checks.size()) + " bound checks," +
                    std::to_string(rep.failures()) + " violated" + worst,
                rep.all_pass());
    }
    // two-point laws on {l, r} attain the Hölder bound
    for (double p : {0.3, 0.5}) {
        for (double th : {0.25, 0.5, 0.75}) {
            auto x = bernoulli(p);
            c.close(x.label() + " Hölder equality theta=" + g17(th), cigf::cigf(x, {th, 1.0 - th}, o.spec).value,
                    holder_bound(x, th, o.spec), 1e-12);
        }
    }
    auto s = chernoff_grid(erlang2(1.0), {1, 1});
    double inf = erlang2_chernoff_infimum(1.0, 1.0);
    double ratio = s.best.bound / inf;
    c.truth("erlang2(1) Chernoff grid infimum / analytic = " + g17(ratio) + " in [1, 1.2]",
            ratio >= 1.0 - 1e-9 && ratio <= 1.2);
}

void reliability(Checker& c, const VerifyOptions& o)
{
    // (a) stress with the strength law
    for (const Distribution& x : {exponential(1.0), uniform(0.0, 1.0)}) {
        SystemSpec sys{2, 1, x, x};
        c.close(x.label() + " R_{1,2} = 2/3", rkn_general(sys, o.spec).value, 2.0 / 3.0, 1e-9);
    }
    for (auto [n, k] : {std::pair{2, 1}, std::pair{4, 2}}) {
        SystemSpec sys{n, k, exponential(1.0), exponential(1.0)};
        auto m = rkn_monte_carlo(sys, o.mc);
        double want = 1.0 - double(k) / (n + 1);
        c.close("MC R_{" + std::to_string(k) + "," + std::to_string(n) + "} within 3 sigma", m.value, want, m.err_est);
    }

    // (b) four paths for power strengths, uniform stress
    const int n = 10;
    for (double th : {0.5, 1.0, 2.0}) {
        auto x = power(th);
        auto rec = rkn_recurrence(x, n, 0.0, 1.0, o.spec);
        auto mc = rkn_monte_carlo_profile(x, uniform(0.0, 1.0), n, o.mc);
        double spread = 0.0, mc_ratio = 0.0;
        for (int k = 0; k <= n; ++k) {
            double cf = rkn_power_closed(th, k, n);
            double sum = rkn_uniform_stress(x, k, n, 0.0, 1.0, o.spec).value;
            spread = std::max({spread, std::fabs(cf - sum), std::fabs(cf - rec[k]), std::fabs(sum - rec[k])});
            if (mc[k].err_est > 0.0) mc_ratio = std::max(mc_ratio, std::fabs(mc[k].value - cf) / mc[k].err_est);
            else if (mc[k].value != cf) mc_ratio = kInf;
        }
        c.close("power(" + g17(th) + ") closed/sum/recurrence spread", spread, 0.0, 1e-9);
        c.truth("power(" + g17(th) + ") MC within 3 sigma of closed form for all k (worst " + g17(mc_ratio) +
                    " of the band)",
                mc_ratio <= 1.0);
    }

    // (c) plot data
    const std::vector<double> thetas{0.1, 0.5, 1.0, 2.0, 10.0};
    for (int nn : {50, 100}) {
        auto rows = figure1_data(thetas, nn);
        auto at = [&](std::size_t ti, int k) { return rows[ti * (nn + 1) + k].r; };
        bool mono = true, ordered = true;
        double exact = 0.0;
        for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
            for (int k = 1; k <= nn; ++k) {
                if (at(ti, k) > at(ti, k - 1)) mono = false;
                if (ti > 0 && at(ti - 1, k) > at(ti, k)) ordered = false;
            }
        }
        for (int k = 0; k <= nn; ++k) exact = std::max(exact, std::fabs(at(2, k) - (1.0 - double(k) / (nn + 1))));
        const std::string tag = "n=" + std::to_string(nn);
        c.truth(tag + " curves nonincreasing in k", mono);
        c.truth(tag + " curves ordered in theta", ordered);
        c.close(tag + " theta=1 curve vs 1-k/(n+1)", exact, 0.0, 1e-13);
    }
}

// G of the maximum of n exponential(1) draws; quadrature at 30 digits.
struct MaxOracle {
    int n;
    ParamPair p;
    double g;
};

const MaxOracle kExpMax[] = {
    {2, {1, 1}, 0.583333333333333333},     {2, {0.5, 1}, 0.833333333333333333},
    {2, {1, 2}, 0.216666666666666667},     {2, {1, 0.5}, 1.45206483006411498},
    {2, {0.5, 0.5}, 1.78539816339744831},  {3, {1, 1}, 0.616666666666666667},
    {3, {0.5, 1}, 0.907936507936507937},   {3, {1, 2}, 0.237698412698412698},
    {3, {1, 0.5}, 1.49810005976125292},    {3, {0.5, 0.5}, 1.87759563779238109},
    {5, {1, 1}, 0.645634920634920635},     {5, {0.5, 1}, 0.976934176934176934},
    {5, {1, 2}, 0.256374181374181374},     {5, {1, 0.5}, 1.5375681991752425},
    {5, {0.5, 0.5}, 1.96128978865044654},
};

void order_stats(Checker& c, const VerifyOptions& o)
{
    auto quad = forced(CigfOptions::Path::quadrature);
    const std::vector<ParamPair> grid{{1, 1}, {0.5, 1}, {1, 2}, {1, 0.5}, {0.5, 0.5}};
    for (const Distribution& x : {uniform(0.0, 1.0), exponential(1.0)}) {
        const bool is_exp = x.family() == Family::exponential;
        for (int n : {2, 3, 5}) {
            for (ParamPair p : grid) {
                const std::string tag = x.label() + " n=" + std::to_string(n) + " " + pp(p);
                double qmin = cigf::cigf(min_order_statistic(x, n), p, o.spec, quad).value;
                c.close(tag + " min series", cigf_min_series(x, n, p, o.spec).value, qmin, 1e-7);
                double qmax = cigf::cigf(max_order_statistic(x, n), p, o.spec, quad).value;
                if (!is_exp) {
                    c.close(tag + " max series", cigf_max_series(x, n, p, o.spec).value, qmax, 1e-7);
                    continue;
                }
                for (const auto& m : kExpMax) {
                    if (m.n == n && m.p.alpha == p.alpha && m.p.beta == p.beta) c.close(tag + " max vs oracle", qmax, m.g, 1e-7);
                }
            }
        }
    }
    c.note("exponential maximum: the series needs H at infinite arguments, compared against frozen oracles instead");

    const int n = 5;
    auto u = uniform(0.0, 1.0);
    auto acc = run_monte_carlo_multi(o.mc, n, [&](std::mt19937_64& rng, double* out) {
        for (int i = 0; i < n; ++i) out[i] = u.sample(rng);
        std::sort(out, out + n);
    });
    for (int k = 1; k <= n; ++k) {
        double want = double(k) / (n + 1);
        double m = korn_mean(u, k, n, o.spec).value;
        const std::string tag = "E X_(" + std::to_string(k) + ":5)";
        c.close(tag + " = k/(n+1)", m, want, 1e-9);
        c.close(tag + " vs sorted samples within 3 sigma", acc[k - 1].mean(), m, 3.0 * acc[k - 1].std_error());
    }
}

void gini(Checker& c, const VerifyOptions& o)
{
    const std::vector<Distribution> fams{bernoulli(0.3), uniform(0.0, 1.0), power(2.0),
                                         exponential(1.0), laplace(1.0), erlang2(1.0)};
    for (const auto& x : fams) {
        for (const auto& q : {DistortionPair::identity(), DistortionPair::powers(2.0, 0.5)}) {
            auto rep = variability_axioms_check(x, x, q, o.spec);
            for (const auto& k : rep.checks) {
                if (k.name == "dispersive_monotone") continue;
                c.truth(x.label() + " " + q.label() + " " + k.name + " lhs " + g17(k.lhs) + " rhs " + g17(k.rhs),
                        k.applicable && k.pass);
            }
        }
    }

    auto mono = [&](const Distribution& x, const Distribution& y, const DistortionPair& q, std::optional<bool> asserted) {
        auto rep = variability_axioms_check(x, y, q, o.spec, asserted);
        for (const auto& k : rep.checks) {
            if (k.name != "dispersive_monotone") continue;
            c.truth(x.label() + " vs " + y.label() + " " + q.label() + " dispersive monotone " + g17(k.lhs) +
                        " <= " + g17(k.rhs),
                    k.applicable && k.pass);
            if (!k.note.empty()) c.note(x.label() + " vs " + y.label() + ": " + k.note);
        }
    };
    for (const auto& q : {DistortionPair::identity(), DistortionPair::powers(2.0, 1.0)}) {
        mono(exponential(2.0), exponential(1.0), q, std::nullopt);
        mono(power(2.0), power(1.0), q, true);
    }

    auto u = uniform(0.0, 1.0);
    auto rk = rkn_comparison(exponential(2.0), exponential(1.0), u, 5, o.spec);
    for (const auto& k : rk.checks) {
        c.truth("R^X <= R^Y " + k.name + ": " + g17(k.lhs) + " <= " + g17(k.rhs), k.applicable && k.pass);
    }
    auto pw = rkn_comparison(power(2.0), power(1.0), u, 5, o.spec);
    if (!pw.checks.empty() && !pw.checks.front().applicable) {
        c.note("power(2) vs power(1): ordering of R not applicable, " + pw.checks.front().note);
    }

    auto e = exponential(1.0);
    double w = weighted_q_gini(e, DistortionPair::identity(), e, o.spec).value;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        MonteCarloConfig mc = o.mc;
        mc.seed = seed;
        auto m = mean_value_repr(e, e, mc);
        c.close("weighted Gini mean-value form, seed " + std::to_string(seed), m.value, w, m.err_est);
    }
}

void bivariate(Checker& c, const VerifyOptions& o)
{
    auto quad = forced(CigfOptions::Path::quadrature);
    const std::vector<BivariateDistribution> cf_laws{BivariateDistribution::triangle_uniform(),
                                                     BivariateDistribution::fgm2x2(0.1),
                                                     BivariateDistribution::fgm2x2(-0.2)};
    for (const auto& v : cf_laws) {
        for (ParamPair p : grid3()) {
            if (in_domain2(v, p) == DomainStatus::outside) continue;
            auto cf = cigf2_closed_form(v, p);
            if (!cf) {
                c.fail(v.label() + " " + pp(p) + ": no closed form");
                continue;
            }
            c.close(v.label() + " " + pp(p) + " closed form vs quadrature", cigf2(v, p, o.spec, quad).value, *cf,
                    1e-8, true);
        }
    }

    const std::vector<std::pair<Distribution, Distribution>> pairs{
        {uniform(0.0, 1.0), uniform(0.0, 1.0)}, {exponential(1.0), uniform(0.0, 1.0)}, {power(2.0), exponential(2.0)}};
    for (const auto& [x, y] : pairs) {
        for (ParamPair p : grid3()) {
            auto [joint, prod] = cigf2_product_check(x, y, p, o.spec);
            c.close(x.label() + " x " + y.label() + " " + pp(p) + " factorization", joint.value, prod.value, 1e-7, true);
        }
    }

    auto uu = BivariateDistribution::product(uniform(0.0, 1.0), uniform(0.0, 1.0));
    auto up = BivariateDistribution::product(uniform(0.0, 1.0), power(2.0));
    auto ee = BivariateDistribution::product(exponential(1.0), exponential(1.0));
    for (const auto* v : {&uu, &up}) {
        for (EntropyKind k : {EntropyKind::ce, EntropyKind::cre}) {
            auto id = independence_identity(*v, k, o.spec);
            c.close(v->label() + " " + entropy_kind_name(k) + " independence identity", id.joint, id.from_marginals, 1e-7);
        }
    }
    {
        auto id = independence_identity(ee, EntropyKind::cre, o.spec);
        c.close(ee.label() + " CRE independence identity", id.joint, id.from_marginals, 1e-7);
    }
    auto fgm = BivariateDistribution::fgm2x2(0.1);
    for (EntropyKind k : {EntropyKind::ce, EntropyKind::cre}) {
        auto id = independence_identity(fgm, k, o.spec);
        double gap = std::fabs(id.joint - id.from_marginals);
        c.truth(fgm.label() + " " + entropy_kind_name(k) + " identity must fail: gap " + g17(gap) + " > 0.01",
                gap > 0.01);
    }

    auto tri = BivariateDistribution::triangle_uniform();
    for (const auto* v : {&fgm, &tri, &uu}) {
        for (EntropyKind k : {EntropyKind::cre, EntropyKind::ce}) {
            for (double order : {1.0, 2.0, 0.5, 1.5}) {
                // fractional orders on a product law nest a 2D quadrature in
                // every Caputo node; integer orders cover it within budget
                if (v == &uu && order != std::floor(order)) continue;
                auto [direct, rec] = joint_recovery_check(*v, k, order, o.spec);
                c.close(v->label() + " " + entropy_kind_name(k) + " order " + g17(order) + " recovery", rec.value,
                        direct.value, 1e-4);
            }
        }
    }

    c.note("product recovery checked at integer orders only");

    auto sd = BivariateDistribution::sum_density();
    MonteCarloConfig mc = o.mc;
    auto m = cigf2_monte_carlo(sd, {1, 1}, mc);
    c.close(sd.label() + " (1,1) Monte Carlo vs quadrature", m.value, cigf2(sd, {1, 1}, o.spec).value, m.err_est);
    c.close(tri.label() + " odds2 at beta=0 is the area", odds2(tri, 0.0, o.spec).value, 0.5, 1e-10);
}

using SuiteFn = void (*)(Checker&, const VerifyOptions&);

const SuiteFn kFns[] = {table2, erlang, gini_identity, entropy, bounds, reliability, order_stats, gini, bivariate};

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : kSuites) v.emplace_back(s.name);
        return v;
    }();
    return names;
}

std::optional<int> suite_criterion(const std::string& name)
{
    const auto& n = suite_names();
    auto it = std::find(n.begin(), n.end(), name);
    if (it == n.end()) return std::nullopt;
    return int(it - n.begin()) + 1;
}

CriterionResult run_criterion(int id, const VerifyOptions& opts)
{
    if (id < 1 || id > 9) throw DomainError("run_criterion: criterion must be in 1..9");
    CriterionResult r;
    r.id = id;
    r.name = kSuites[id - 1].name;
    r.budget_seconds = kSuites[id - 1].budget;
    Checker c(r, opts.inject_failure && *opts.inject_failure == id);
    auto t0 = std::chrono::steady_clock::now();
    try {
        kFns[id - 1](c, opts);
    } catch (const std::exception& e) {
        c.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > r.budget_seconds) {
        r.pass = false;
        r.failures.push_back("runtime " + g17(r.seconds) + " s exceeds budget " + g17(r.budget_seconds) + " s");
    }
    return r;
}

std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& opts)
{
    std::vector<CriterionResult> out;
    if (suite == "all") {
        for (int i = 1; i <= 9; ++i) out.push_back(run_criterion(i, opts));
        return out;
    }
    auto id = suite_criterion(suite);
    if (!id) throw ParseError("unknown suite '" + suite + "'");
    out.push_back(run_criterion(*id, opts));
    return out;
}

std::string format_result(const CriterionResult& r)
{
    std::ostringstream os;
    char t[64];
    std::snprintf(t, sizeof t, "%.2fs/%.0fs", r.seconds, r.budget_seconds);
    os << "criterion " << r.id << " (" << r.name << "): " << (r.pass ? "PASS" : "FAIL") << " " << r.checks
       << " checks " << t;
    for (const auto& f : r.failures) os << "\n  FAIL " << f;
    return os.str();
}

}  // namespace cigf
