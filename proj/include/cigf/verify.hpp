#pragma once

// Oracle suites behind the acceptance criteria. Shared by the `verify`
// subcommand and the acceptance test binary.

#include <optional>
#include <string>
#include <vector>

#include "cigf/monte_carlo.hpp"
#include "cigf/numerics.hpp"

namespace cigf {

struct VerifyOptions {
    QuadSpec spec;
    MonteCarloConfig mc;
    /// Perturbs the first oracle compared in this criterion so that the
    /// suite must report it as failing.
    std::optional<int> inject_failure;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = true;
    int checks = 0;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

/// Suite names in criterion order: table2, erlang, gini_identity, entropy,
/// bounds, reliability, order_stats, gini, bivariate.
const std::vector<std::string>& suite_names();

/// Criterion number of a suite name, nullopt when unknown.
std::optional<int> suite_criterion(const std::string& name);

/// Runs one criterion (1..9). A runtime above the criterion's budget is a failure.
CriterionResult run_criterion(int id, const VerifyOptions& opts = {});

/// "all" or one suite name.
std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& opts = {});

/// "criterion N (name): PASS|FAIL ..." followed by failure lines.
std::string format_result(const CriterionResult& r);

}  // namespace cigf
