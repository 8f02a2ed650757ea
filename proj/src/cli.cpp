#include "cigf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cigf/bivariate.hpp"
#include "cigf/bounds.hpp"
#include "cigf/entropy.hpp"
#include "cigf/errors.hpp"
#include "cigf/reliability.hpp"
#include "cigf/report.hpp"
#include "cigf/verify.hpp"

namespace cigf {

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& s, const std::string& ctx)
{
    std::string t = trim(s);
    if (t == "inf" || t == "+inf") return kInf;
    if (t == "-inf") return -kInf;
    try {
        std::size_t used = 0;
        double v = std::stod(t, &used);
        if (used == t.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(ctx + ": '" + s + "' is not a number");
}

long to_long(const std::string& s, const std::string& ctx)
{
    std::string t = trim(s);
    try {
        std::size_t used = 0;
        long v = std::stol(t, &used);
        if (used == t.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(ctx + ": '" + s + "' is not an integer");
}

std::vector<double> read_samples(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("emp: cannot open '" + path + "'");
    std::vector<double> xs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        t = trim(split(t, ',').front());
        xs.push_back(to_double(t, path + ":" + std::to_string(lineno)));
    }
    if (xs.empty()) throw ParseError("emp: '" + path + "' holds no samples");
    return xs;
}

std::string method_of(const std::string& s, std::initializer_list<const char*> allowed, const char* flag)
{
    for (const char* a : allowed) {
        if (s == a) return s;
    }
    std::string msg = std::string(flag) + ": '" + s + "' is not one of";
    for (const char* a : allowed) msg += std::string(" ") + a;
    throw ParseError(msg);
}

}  // namespace

Distribution parse_distribution(const std::string& text)
{
    auto parts = split(trim(text), ':');
    const std::string name = parts.front();
    const std::vector<std::string> args(parts.begin() + 1, parts.end());
    auto need = [&](std::size_t n) {
        if (args.size() != n) {
            throw ParseError("distribution '" + text + "': " + name + " takes " + std::to_string(n) + " parameter" +
                             (n == 1 ? "" : "s"));
        }
    };
    auto num = [&](std::size_t i) { return to_double(args[i], "distribution '" + text + "'"); };

    if (name == "emp" || name == "empirical") {
        if (args.empty()) throw ParseError("distribution '" + text + "': expected emp:@file");
        std::string path = text.substr(text.find(':') + 1);
        if (!path.empty() && path[0] == '@') path.erase(0, 1);
        return discrete(from_samples(read_samples(path)));
    }
    if (name == "exp" || name == "exponential") {
        need(1);
        return exponential(num(0));
    }
    if (name == "unif" || name == "uniform") {
        need(2);
        return uniform(num(0), num(1));
    }
    if (name == "power") {
        need(1);
        return power(num(0));
    }
    if (name == "bern" || name == "bernoulli") {
        need(1);
        return bernoulli(num(0));
    }
    if (name == "laplace") {
        need(1);
        return laplace(num(0));
    }
    if (name == "erlang2") {
        need(1);
        return erlang2(num(0));
    }
    if (name == "degen" || name == "degenerate") {
        need(1);
        return degenerate(num(0));
    }
    throw ParseError("distribution '" + text + "': unknown family '" + name + "'");
}

DistortionPair parse_distortion(const std::string& text)
{
    std::string t = trim(text);
    if (t == "id" || t == "identity") return DistortionPair::identity();
    auto parts = split(t, ':');
    if ((parts[0] == "pow" || parts[0] == "power") && parts.size() == 3) {
        return DistortionPair::powers(to_double(parts[1], "distortion"), to_double(parts[2], "distortion"));
    }
    throw ParseError("distortion '" + text + "': expected id or pow:a:b");
}

void apply_config_text(RunConfig& cfg, const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        const std::string ctx = "config line " + std::to_string(lineno);
        if (eq == std::string::npos) throw ParseError(ctx + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "abs_tol") cfg.spec.abs_tol = to_double(val, ctx);
        else if (key == "rel_tol") cfg.spec.rel_tol = to_double(val, ctx);
        else if (key == "max_subdiv") cfg.spec.max_subdiv = int(to_long(val, ctx));
        else if (key == "tail_mass") cfg.spec.tail_mass = to_double(val, ctx);
        else if (key == "series_terms_max") cfg.spec.series_terms_max = int(to_long(val, ctx));
        else if (key == "series_tail_tol") cfg.spec.series_tail_tol = to_double(val, ctx);
        else if (key == "trials") cfg.mc.n_trials = to_long(val, ctx);
        else if (key == "seed") cfg.mc.seed = std::uint64_t(to_long(val, ctx));
        else if (key == "streams") cfg.mc.n_streams = int(to_long(val, ctx));
        else throw ParseError(ctx + ": unknown key '" + key + "'");
    }
}

void apply_config_file(RunConfig& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    apply_config_text(cfg, ss.str());
}

namespace {

struct Globals {
    std::string config;
    std::optional<double> abs_tol, rel_tol, tail_mass, series_tail_tol;
    std::optional<int> max_subdiv, series_terms_max, streams;
    std::optional<long> trials;
    std::optional<std::uint64_t> seed;

    RunConfig resolve() const
    {
        RunConfig cfg;
        std::string path = config;
        if (path.empty()) {
            if (const char* env = std::getenv("CIGF_CONFIG")) path = env;
        }
        if (!path.empty()) apply_config_file(cfg, path);
        if (abs_tol) cfg.spec.abs_tol = *abs_tol;
        if (rel_tol) cfg.spec.rel_tol = *rel_tol;
        if (tail_mass) cfg.spec.tail_mass = *tail_mass;
        if (series_tail_tol) cfg.spec.series_tail_tol = *series_tail_tol;
        if (max_subdiv) cfg.spec.max_subdiv = *max_subdiv;
        if (series_terms_max) cfg.spec.series_terms_max = *series_terms_max;
        if (streams) cfg.mc.n_streams = *streams;
        if (trials) cfg.mc.n_trials = *trials;
        if (seed) cfg.mc.seed = *seed;
        cfg.spec.validate();
        cfg.mc.validate();
        return cfg;
    }
};

void add_globals(CLI::App& app, Globals& g)
{
    app.add_option("--config", g.config, "key=value config file (default: $CIGF_CONFIG)");
    app.add_option("--abs-tol", g.abs_tol, "quadrature absolute tolerance");
    app.add_option("--rel-tol", g.rel_tol, "quadrature relative tolerance");
    app.add_option("--max-subdiv", g.max_subdiv, "quadrature subdivision budget");
    app.add_option("--tail-mass", g.tail_mass, "mass allowed outside an x-space truncation window");
    app.add_option("--series-terms-max", g.series_terms_max, "series term budget");
    app.add_option("--series-tail-tol", g.series_tail_tol, "series stopping tolerance");
    app.add_option("--trials", g.trials, "Monte Carlo trials");
    app.add_option("--seed", g.seed, "Monte Carlo seed");
    app.add_option("--streams", g.streams, "Monte Carlo streams (threads)");
}

CigfOptions::Path parse_path(const std::string& s)
{
    method_of(s, {"auto", "closed", "quadrature", "series"}, "--path");
    if (s == "closed") return CigfOptions::Path::closed_form;
    if (s == "quadrature") return CigfOptions::Path::quadrature;
    if (s == "series") return CigfOptions::Path::series;
    return CigfOptions::Path::automatic;
}

MeasureReport with_meta(MeasureReport r, std::initializer_list<std::pair<const char*, std::string>> kv)
{
    for (const auto& [k, v] : kv) r.meta[k] = v;
    return r;
}

std::vector<double> parse_list(const std::string& s, const char* flag)
{
    std::vector<double> out;
    for (const auto& p : split(s, ',')) out.push_back(to_double(p, flag));
    return out;
}

// ---------------------------------------------------------------------------
// measure

struct MeasureArgs {
    std::string dist, measure = "cigf", via = "direct", path = "auto";
    double alpha = 1.0, beta = 1.0, nu = 0.5;
    int n = 1;
    bool cross_check = false;
};

MeasureReport eval_measure(const MeasureArgs& a, const RunConfig& cfg)
{
    auto x = parse_distribution(a.dist);
    const QuadSpec& spec = cfg.spec;
    const std::string& m = a.measure;
    method_of(m, {"cigf", "cre", "ce", "cre_n", "ce_n", "cre_frac", "ce_frac", "h", "k", "odds"}, "--measure");
    method_of(a.via, {"direct", "cigf", "marginal"}, "--via");
    CigfOptions co;
    co.path = parse_path(a.path);
    co.cross_check = a.cross_check;
    RecoveryOptions ro;
    ro.cigf = co;

    if (m == "cigf") return cigf::cigf(x, {a.alpha, a.beta}, spec, co);
    if (m == "h") return h_measure(x, a.alpha, spec);
    if (m == "k") return k_measure(x, a.beta, spec);
    if (m == "odds") return cigf_odds(x, a.beta, spec);

    const EntropyKind kind = (m.rfind("cre", 0) == 0) ? EntropyKind::cre : EntropyKind::ce;
    const bool frac = m.size() > 5 && m.substr(m.size() - 5) == "_frac";
    const bool gen = m.size() > 2 && m.substr(m.size() - 2) == "_n";
    const double order = frac ? a.nu : gen ? double(a.n) : 1.0;

    if (a.via == "direct") return entropy_direct(x, kind, order, spec);
    if (a.via == "marginal") return marginal_recovery(x, kind, order, spec, ro);
    if (frac) {
        FracDiffSpec fd;
        fd.order = a.nu;
        return kind == EntropyKind::cre ? cre_frac_from_cigf(x, a.nu, fd, spec, ro)
                                        : ce_frac_from_cigf(x, a.nu, fd, spec, ro);
    }
    if (gen) {
        return kind == EntropyKind::cre ? cre_n_from_cigf(x, a.n, spec, ro) : ce_n_from_cigf(x, a.n, spec, ro);
    }
    return kind == EntropyKind::cre ? cre_from_cigf(x, spec, ro) : ce_from_cigf(x, spec, ro);
}

// ---------------------------------------------------------------------------
// reliability

struct ReliabilityArgs {
    std::string dist, stress, k_range, method = "sum", out = "csv", figure1;
    int n = 1;
};

std::pair<int, int> parse_range(const std::string& s, int n)
{
    if (s.empty()) return {0, n};
    auto p = split(s, ':');
    if (p.size() != 2) throw ParseError("--k-range: expected a:b");
    int a = int(to_long(p[0], "--k-range")), b = int(to_long(p[1], "--k-range"));
    if (a < 0 || b > n || a > b) throw ParseError("--k-range: need 0 <= a <= b <= n");
    return {a, b};
}

int cmd_reliability(const ReliabilityArgs& a, const RunConfig& cfg, std::ostream& out)
{
    method_of(a.out, {"csv", "json"}, "--out");
    const bool csv = a.out == "csv";
    if (!a.figure1.empty()) {
        auto rows = figure1_data(parse_list(a.figure1, "--figure1"), a.n);
        if (csv) out << "theta,k,n,r\n";
        for (const auto& r : rows) {
            if (csv) {
                out << csv_line({fmt17(r.theta), std::to_string(r.k), std::to_string(a.n), fmt17(r.r)}) << "\n";
            } else {
                MeasureReport m;
                m.value = r.r;
                m.method = Method::closed_form;
                m.meta = {{"theta", fmt17(r.theta)}, {"k", std::to_string(r.k)}, {"n", std::to_string(a.n)}};
                out << to_json(m) << "\n";
            }
        }
        return 0;
    }

    method_of(a.method, {"closed", "sum", "recurrence", "general", "mc"}, "--method");
    if (a.dist.empty()) throw ParseError("reliability: --dist is required");
    auto x = parse_distribution(a.dist);
    auto sup = x.support();
    std::optional<Distribution> t;
    if (!a.stress.empty()) {
        t = parse_distribution(a.stress);
    } else if (sup.bounded()) {
        t = uniform(sup.l, sup.r);
    } else {
        throw DomainError("reliability: --stress is required when the strength support is unbounded");
    }
    const auto [k0, k1] = parse_range(a.k_range, a.n);

    std::vector<MeasureReport> res;
    if (a.method == "mc") {
        auto prof = rkn_monte_carlo_profile(x, *t, a.n, cfg.mc);
        for (int k = k0; k <= k1; ++k) res.push_back(prof[k]);
    } else if (a.method == "recurrence") {
        auto ts = t->support();
        if (t->family() != Family::uniform) throw DomainError("reliability: recurrence needs a uniform stress");
        auto rec = rkn_recurrence(x, a.n, ts.l, ts.r, cfg.spec);
        for (int k = k0; k <= k1; ++k) {
            MeasureReport m;
            m.value = rec[k];
            m.method = Method::series;
            m.meta["path"] = "recurrence";
            res.push_back(m);
        }
    } else {
        for (int k = k0; k <= k1; ++k) {
            if (a.method == "closed") {
                auto ts = t->support();
                if (x.family() != Family::power || t->family() != Family::uniform || ts.l != 0.0 || ts.r != 1.0) {
                    throw DomainError("reliability: closed form needs power strengths and unif:0:1 stress");
                }
                MeasureReport m;
                m.value = rkn_power_closed(x.tag().params.at(0), k, a.n);
                m.method = Method::closed_form;
                res.push_back(m);
            } else if (a.method == "sum") {
                auto ts = t->support();
                if (t->family() != Family::uniform) throw DomainError("reliability: sum needs a uniform stress");
                res.push_back(rkn_uniform_stress(x, k, a.n, ts.l, ts.r, cfg.spec));
            } else {
                res.push_back(rkn_general(SystemSpec{a.n, k, x, *t}, cfg.spec));
            }
        }
    }

    if (csv) out << "k,n,r,err_est,method\n";
    for (int k = k0; k <= k1; ++k) {
        const MeasureReport& m = res[k - k0];
        if (csv) {
            out << csv_line({std::to_string(k), std::to_string(a.n), fmt17(m.value), fmt17(m.err_est),
                             method_name(m.method)})
                << "\n";
        } else {
            out << to_json(with_meta(m, {{"k", std::to_string(k)}, {"n", std::to_string(a.n)}})) << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bounds

int cmd_bounds(const std::string& dist, const std::string& format, const RunConfig& cfg, std::ostream& out)
{
    method_of(format, {"json", "text"}, "--format");
    auto x = parse_distribution(dist);
    auto rep = verify_bounds(x, default_bounds_grid(), cfg.spec);
    for (const auto& c : rep.checks) {
        const char* side = c.side == BoundSide::upper ? "upper" : "lower";
        if (format == "json") {
            nlohmann::ordered_json j;
            j["name"] = c.name;
            j["params"] = c.params;
            j["side"] = side;
            j["pass"] = c.pass;
            j["note"] = c.note;
            std::string s = j.dump();
            s.pop_back();
            out << s << ",\"value\":" << json_number(c.value) << ",\"bound\":" << json_number(c.bound)
                << ",\"margin\":" << json_number(c.margin) << "}\n";
        } else {
            char buf[256];
            std::snprintf(buf, sizeof buf, "%-4s %-22s %-26s %-5s value %-24s bound %-24s margin %.3e", c.pass ? "ok" : "FAIL",
                          c.name.c_str(), c.params.c_str(), side, fmt17(c.value).c_str(), fmt17(c.bound).c_str(),
                          c.margin);
            out << buf << (c.note.empty() ? "" : "  " + c.note) << "\n";
        }
    }
    for (const auto& s : rep.skipped) {
        if (format == "json") {
            nlohmann::ordered_json j;
            j["skipped"] = s;
            out << j.dump() << "\n";
        } else {
            out << "skip " << s << "\n";
        }
    }
    if (format == "text") {
        out << rep.distribution << ": " << rep.checks.size() << " checks, " << rep.failures() << " violated\n";
    }
    return rep.all_pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// gini

struct GiniArgs {
    std::string dist, q = "id", weight;
    bool mvr = false;
};

int cmd_gini(const GiniArgs& a, const RunConfig& cfg, std::ostream& out)
{
    auto x = parse_distribution(a.dist);
    auto q = parse_distortion(a.q);
    if (a.weight.empty()) {
        if (a.mvr) throw ParseError("gini: --mean-value-repr needs --weight");
        out << to_json(with_meta(q_gini(x, q, cfg.spec), {{"q", q.label()}})) << "\n";
        return 0;
    }
    auto t = parse_distribution(a.weight);
    out << to_json(with_meta(weighted_q_gini(x, q, t, cfg.spec), {{"q", q.label()}, {"weight", t.label()}})) << "\n";
    if (a.mvr) {
        out << to_json(with_meta(mean_value_repr(x, t, cfg.mc), {{"weight", t.label()}, {"path", "mean_value"}}))
            << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bivariate

struct BivariateArgs {
    std::string example = "triangle", x, y, measure = "cigf", alphas = "1", betas = "1", region = "rect",
                via = "direct", path = "auto";
    double theta = 0.0, nu = 0.5;
    int n = 1;
};

int cmd_bivariate(const BivariateArgs& a, const RunConfig& cfg, std::ostream& out)
{
    method_of(a.measure, {"cigf", "cre", "ce", "cre_n", "ce_n", "cre_frac", "ce_frac", "odds"}, "--measure");
    method_of(a.region, {"rect", "s"}, "--region");
    method_of(a.via, {"direct", "cigf"}, "--via");
    BivariateDistribution v = [&] {
        if (a.example == "product") {
            if (a.x.empty() || a.y.empty()) throw ParseError("bivariate: product needs --x and --y");
            return BivariateDistribution::product(parse_distribution(a.x), parse_distribution(a.y));
        }
        method_of(a.example, {"fgm2x2", "triangle", "sum_density"}, "--example");
        return make_bivariate(a.example, a.theta);
    }();
    CigfOptions co;
    co.path = parse_path(a.path);

    if (a.measure == "cigf" || a.measure == "odds") {
        const auto al = parse_list(a.alphas, "--alpha");
        const auto be = parse_list(a.betas, "--beta");
        for (double b : be) {
            if (a.measure == "odds") {
                out << to_json(with_meta(odds2(v, b, cfg.spec, co), {{"beta", fmt17(b)}, {"law", v.label()}})) << "\n";
                continue;
            }
            for (double al1 : al) {
                out << to_json(with_meta(cigf2(v, {al1, b}, cfg.spec, co),
                                         {{"alpha", fmt17(al1)}, {"beta", fmt17(b)}, {"law", v.label()}}))
                    << "\n";
            }
        }
        return 0;
    }

    const std::string& m = a.measure;
    const EntropyKind kind = (m.rfind("cre", 0) == 0) ? EntropyKind::cre : EntropyKind::ce;
    const bool frac = m.find("_frac") != std::string::npos;
    const bool gen = m.find("_n") != std::string::npos;
    const double order = frac ? a.nu : gen ? double(a.n) : 1.0;
    MeasureReport r;
    if (a.via == "cigf") {
        r = joint_recovery_check(v, kind, order, cfg.spec, co).second;
    } else {
        const JointRegion where = a.region == "s" ? JointRegion::s_region : JointRegion::support_rectangle;
        const bool res = kind == EntropyKind::cre;
        if (frac) r = res ? joint_cre_frac(v, a.nu, cfg.spec, where) : joint_ce_frac(v, a.nu, cfg.spec, where);
        else if (gen) r = res ? joint_cre_n(v, a.n, cfg.spec, where) : joint_ce_n(v, a.n, cfg.spec, where);
        else r = res ? joint_cre(v, cfg.spec, where) : joint_ce(v, cfg.spec, where);
    }
    out << to_json(with_meta(r, {{"law", v.label()}, {"order", fmt17(order)}})) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& suite, std::optional<int> inject, const RunConfig& cfg, std::ostream& out)
{
    if (inject && (*inject < 1 || *inject > 9)) throw ParseError("--inject-failure: criterion must be in 1..9");
    VerifyOptions vo;
    vo.spec = cfg.spec;
    vo.mc = cfg.mc;
    vo.inject_failure = inject;
    std::vector<std::string> failed;
    auto names = suite_names();
    if (suite != "all" && !suite_criterion(suite)) throw ParseError("--suite: unknown suite '" + suite + "'");
    std::vector<int> ids;
    if (suite == "all") {
        for (int i = 1; i <= 9; ++i) ids.push_back(i);
    } else {
        ids.push_back(*suite_criterion(suite));
    }
    for (int id : ids) {
        auto r = run_criterion(id, vo);
        out << format_result(r) << "\n" << std::flush;
        if (!r.pass) failed.push_back("criterion " + std::to_string(r.id) + " (" + r.name + ")");
    }
    if (failed.empty()) {
        out << "verify: PASS\n";
        return 0;
    }
    out << "verify: FAIL";
    for (const auto& f : failed) out << " " << f;
    out << "\n";
    return 1;
}

const char* kFooter = R"(Distribution specs: exp:RATE unif:L:R power:THETA bern:P laplace:SCALE erlang2:RATE
degen:C emp:@FILE (one sample per line).
Output: JSON objects {"value","err_est","method","meta"}, one per line.
reliability CSV columns: k,n,r,err_est,method; with --figure1: theta,k,n,r.
Exit codes: 0 ok, 1 verification failure or bound violation, 2 parse error,
3 domain error, 4 accuracy error.)";

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cumulative information generating function toolkit", "cigf"};
    app.footer(kFooter);
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    add_globals(app, g);

    MeasureArgs ma;
    auto* measure = app.add_subcommand("measure", "evaluate one measure of a distribution");
    measure->add_option("--dist", ma.dist, "distribution spec")->required();
    measure->add_option("--measure", ma.measure, "cigf|cre|ce|cre_n|ce_n|cre_frac|ce_frac|h|k|odds")
        ->capture_default_str();
    measure->add_option("--alpha", ma.alpha)->capture_default_str();
    measure->add_option("--beta", ma.beta)->capture_default_str();
    measure->add_option("--n", ma.n, "order of cre_n / ce_n")->capture_default_str();
    measure->add_option("--nu", ma.nu, "order of cre_frac / ce_frac")->capture_default_str();
    measure->add_option("--via", ma.via, "entropy path: direct|cigf|marginal")->capture_default_str();
    measure->add_option("--path", ma.path, "cigf path: auto|closed|quadrature|series")->capture_default_str();
    measure->add_flag("--cross-check", ma.cross_check, "also run quadrature next to a closed form or series");

    std::string bdist, bformat = "json";
    auto* bounds = app.add_subcommand("bounds", "check every applicable bound; exit 1 on a violation");
    bounds->add_option("--dist", bdist, "distribution spec")->required();
    bounds->add_option("--format", bformat, "json|text")->capture_default_str();

    ReliabilityArgs ra;
    auto* rel = app.add_subcommand("reliability", "k-out-of-n stress-strength reliability");
    rel->add_option("--dist", ra.dist, "strength distribution spec");
    rel->add_option("--stress", ra.stress, "stress distribution spec (default: uniform on the strength support)");
    rel->add_option("--n", ra.n, "components")->capture_default_str();
    rel->add_option("--k-range", ra.k_range, "a:b (default 0:n)");
    rel->add_option("--method", ra.method, "closed|sum|recurrence|general|mc")->capture_default_str();
    rel->add_option("--out", ra.out, "csv|json")->capture_default_str();
    rel->add_option("--figure1", ra.figure1, "comma-separated theta list: power(theta) curves for k=0..n");

    GiniArgs ga;
    auto* gini = app.add_subcommand("gini", "distorted Gini function");
    gini->add_option("--dist", ga.dist, "distribution spec")->required();
    gini->add_option("--q", ga.q, "id or pow:a:b")->capture_default_str();
    gini->add_option("--weight", ga.weight, "weighting distribution spec");
    gini->add_flag("--mean-value-repr", ga.mvr, "also estimate the weighted value by Monte Carlo");

    BivariateArgs va;
    auto* biv = app.add_subcommand("bivariate", "two-dimensional CIGF and joint entropies");
    biv->add_option("--example", va.example, "fgm2x2|triangle|sum_density|product")->capture_default_str();
    biv->add_option("--theta", va.theta, "fgm2x2 dependence")->capture_default_str();
    biv->add_option("--x", va.x, "first factor of a product");
    biv->add_option("--y", va.y, "second factor of a product");
    biv->add_option("--measure", va.measure, "cigf|odds|cre|ce|cre_n|ce_n|cre_frac|ce_frac")->capture_default_str();
    biv->add_option("--alpha", va.alphas, "comma-separated list")->capture_default_str();
    biv->add_option("--beta", va.betas, "comma-separated list")->capture_default_str();
    biv->add_option("--n", va.n)->capture_default_str();
    biv->add_option("--nu", va.nu)->capture_default_str();
    biv->add_option("--region", va.region, "joint entropy region: rect|s")->capture_default_str();
    biv->add_option("--via", va.via, "joint entropy path: direct|cigf (derivative over S)")->capture_default_str();
    biv->add_option("--path", va.path, "cigf path: auto|closed|quadrature")->capture_default_str();

    std::string suite = "all";
    std::optional<int> inject;
    auto* ver = app.add_subcommand("verify", "run the oracle suites; exit 1 on any failure");
    ver->add_option("--suite", suite, "all|table2|erlang|gini_identity|entropy|bounds|reliability|order_stats|gini|bivariate")
        ->capture_default_str();
    ver->add_option("--inject-failure", inject, "corrupt one oracle of criterion N (1..9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        const RunConfig cfg = g.resolve();
        if (*measure) {
            out << to_json(with_meta(eval_measure(ma, cfg), {{"dist", ma.dist}, {"measure", ma.measure}})) << "\n";
            return 0;
        }
        if (*bounds) return cmd_bounds(bdist, bformat, cfg, out);
        if (*rel) return cmd_reliability(ra, cfg, out);
        if (*gini) return cmd_gini(ga, cfg, out);
        if (*biv) return cmd_bivariate(va, cfg, out);
        if (*ver) return cmd_verify(suite, inject, cfg, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const AccuracyError& e) {
        err << "accuracy error: " << e.what() << " (best estimate " << fmt17(e.best_estimate()) << ", err_est "
            << fmt17(e.error_estimate()) << ")\n";
        return 4;
    }
    return 2;
}

}  // namespace cigf
