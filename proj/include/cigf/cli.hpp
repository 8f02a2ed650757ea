#pragma once

// Command-line front end: spec-string parsing, config files and the
// measure / bounds / reliability / gini / bivariate / verify subcommands.

#include <iosfwd>
#include <string>

#include "cigf/distribution.hpp"
#include "cigf/gini.hpp"
#include "cigf/monte_carlo.hpp"
#include "cigf/numerics.hpp"

namespace cigf {

/// exp:1.5, unif:0:1, power:2, bern:0.3, laplace:1, erlang2:1, degen:2,
/// emp:@file (one sample per line). Long family names are accepted too.
/// Throws ParseError on malformed text, DomainError on bad parameters.
Distribution parse_distribution(const std::string& text);

/// id, or pow:a:b for (u^a, u^b).
DistortionPair parse_distortion(const std::string& text);

struct RunConfig {
    QuadSpec spec;
    MonteCarloConfig mc;
};

/// key=value lines; '#' starts a comment. Keys: abs_tol, rel_tol, max_subdiv,
/// tail_mass, series_terms_max, series_tail_tol, trials, seed, streams.
void apply_config_text(RunConfig& cfg, const std::string& text);
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Exit codes: 0 ok, 1 verification failure or bound violation, 2 parse
/// error, 3 domain error, 4 accuracy error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cigf
