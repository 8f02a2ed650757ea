#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cigf/cli.hpp"
#include "cigf/errors.hpp"

using namespace cigf;

namespace {

struct Out {
    int rc;
    std::string out, err;
};

Out call(std::vector<const char*> args)
{
    args.insert(args.begin(), "cigf");
    std::ostringstream o, e;
    int rc = run(int(args.size()), args.data(), o, e);
    return {rc, o.str(), e.str()};
}

}  // namespace

TEST_CASE("measure emits one JSON object")
{
    auto r = call({"measure", "--dist", "exp:1", "--measure", "cigf", "--alpha", "1", "--beta", "1"});
    CHECK(r.rc == 0);
    CHECK(r.out.rfind("{\"value\":0.5,", 0) == 0);
    CHECK(r.out.find("\"err_est\"") != std::string::npos);
    CHECK(r.out.find("\"method\":\"closed_form\"") != std::string::npos);
    auto c = call({"measure", "--dist", "unif:0:1", "--measure", "ce", "--via", "cigf"});
    CHECK(c.rc == 0);
    CHECK(c.out.find("\"value\":0.2499") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(call({"measure", "--dist", "nope:1"}).rc == 2);
    CHECK(call({"measure"}).rc == 2);
    CHECK(call({"frobnicate"}).rc == 2);
    auto d = call({"measure", "--dist", "exp:1", "--alpha", "1", "--beta", "0"});
    CHECK(d.rc == 3);
    CHECK(d.err.find("domain error") != std::string::npos);
    CHECK(call({"measure", "--dist", "exp:-2"}).rc == 3);
}

TEST_CASE("reliability closed form lines")
{
    auto r = call({"reliability", "--dist", "power:1", "--n", "100", "--method", "closed"});
    REQUIRE(r.rc == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "k,n,r,err_est,method");
    int k = 0;
    while (std::getline(in, line)) {
        double v = std::stod(line.substr(line.find(',', line.find(',') + 1) + 1));
        CHECK(v == doctest::Approx(1.0 - k / 101.0).epsilon(1e-14));
        ++k;
    }
    CHECK(k == 101);
    auto j = call({"reliability", "--dist", "power:2", "--n", "4", "--k-range", "1:2", "--out", "json"});
    CHECK(j.rc == 0);
    CHECK(std::count(j.out.begin(), j.out.end(), '\n') == 2);
    auto f = call({"reliability", "--figure1", "0.5,2", "--n", "3"});
    CHECK(std::count(f.out.begin(), f.out.end(), '\n') == 9);
}

TEST_CASE("output is deterministic for Monte Carlo paths")
{
    std::vector<const char*> a{"reliability", "--dist", "power:2", "--n", "3", "--method", "mc", "--trials", "20000",
                               "--seed", "9"};
    CHECK(call(a).out == call(a).out);
}

TEST_CASE("config file and flag precedence")
{
    RunConfig cfg;
    apply_config_text(cfg, "# comment\nrel_tol = 1e-7\ntrials=500\nseed=3\n");
    CHECK(cfg.spec.rel_tol == 1e-7);
    CHECK(cfg.mc.n_trials == 500);
    CHECK(cfg.mc.seed == 3);
    CHECK_THROWS_AS(apply_config_text(cfg, "bogus=1\n"), ParseError);

    const std::string path = "cigf_test_config.txt";
    {
        std::ofstream f(path);
        f << "trials=1000\nseed=5\n";
    }
    std::vector<const char*> base{"gini", "--dist", "exp:1", "--weight", "exp:1", "--mean-value-repr", "--config",
                                  path.c_str()};
    auto from_file = call(base);
    auto overridden = base;
    overridden.push_back("--seed");
    overridden.push_back("6");
    auto from_flag = call(overridden);
    auto explicit_flags = call({"gini", "--dist", "exp:1", "--weight", "exp:1", "--mean-value-repr", "--trials", "1000",
                                "--seed", "5"});
    CHECK(from_file.rc == 0);
    CHECK(from_file.out == explicit_flags.out);
    CHECK(from_file.out != from_flag.out);
    std::remove(path.c_str());
}

TEST_CASE("bounds and bivariate subcommands")
{
    auto b = call({"bounds", "--dist", "unif:0:1"});
    CHECK(b.rc == 0);
    CHECK(b.out.find("\"margin\"") != std::string::npos);
    auto v = call({"bivariate", "--example", "triangle", "--alpha", "0.5,1", "--beta", "1,2"});
    CHECK(v.rc == 0);
    CHECK(std::count(v.out.begin(), v.out.end(), '\n') == 4);
    auto p = call({"bivariate", "--example", "product", "--x", "unif:0:1", "--y", "unif:0:1", "--measure", "cre"});
    CHECK(p.rc == 0);
    CHECK(call({"bivariate", "--example", "product"}).rc == 2);
}

TEST_CASE("verify names the failing criterion")
{
    auto ok = call({"verify", "--suite", "erlang"});
    CHECK(ok.rc == 0);
    auto bad = call({"verify", "--suite", "erlang", "--inject-failure", "2"});
    CHECK(bad.rc == 1);
    CHECK(bad.out.find("criterion 2 (erlang): FAIL") != std::string::npos);
    CHECK(call({"verify", "--suite", "nope"}).rc == 2);
}
