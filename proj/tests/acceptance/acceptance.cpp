// One line per acceptance criterion. Criteria 1-9 run in process; 10 drives
// the CLI binary.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <string>

#include "cigf/verify.hpp"

namespace {

struct Proc {
    int rc = -1;
    std::string out;
    double seconds = 0.0;
};

Proc spawn(const std::string& args)
{
    Proc p;
    const std::string cmd = std::string("\"") + CIGF_CLI_PATH + "\" " + args + " 2>&1";
    auto t0 = std::chrono::steady_clock::now();
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return p;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) p.out.append(buf.data(), n);
    int st = pclose(f);
    p.rc = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    p.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return p;
}

}  // namespace

int main()
{
    int failed = 0;
    for (int id = 1; id <= 9; ++id) {
        auto r = cigf::run_criterion(id);
        std::printf("criterion %d %s: %s (%d checks, %.2fs)\n", id, r.name.c_str(), r.pass ? "PASS" : "FAIL", r.checks,
                    r.seconds);
        for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failed;
    }

    // 10: full run exits 0 within 5 minutes; each injected violation exits
    // nonzero and names its criterion
    std::string why;
    auto full = spawn("verify --suite all");
    if (full.rc != 0) why += " full run exit " + std::to_string(full.rc) + ";";
    if (full.seconds > 300.0) why += " full run took " + std::to_string(full.seconds) + " s;";
    const auto& names = cigf::suite_names();
    for (int id = 1; id <= 9; ++id) {
        const std::string tag = "criterion " + std::to_string(id) + " (" + names[id - 1] + "): FAIL";
        auto p = spawn("verify --suite " + names[id - 1] + " --inject-failure " + std::to_string(id));
        if (p.rc == 0) why += " injected " + std::to_string(id) + " exited 0;";
        if (p.out.find(tag) == std::string::npos) why += " injected " + std::to_string(id) + " not named;";
    }
    const bool ok10 = why.empty();
    std::printf("criterion 10 verify_cli: %s (full run %.2fs)%s\n", ok10 ? "PASS" : "FAIL", full.seconds,
                why.c_str());
    if (!ok10) ++failed;
    return failed == 0 ? 0 : 1;
}
