#pragma once

#include <stdexcept>
#include <string>

namespace cigf {

/// A precondition on the inputs does not hold (bad parameter, exponent
/// outside the finiteness domain, stencil leaving a function's domain).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical budget ran out before the requested accuracy was reached.
/// Carries the best estimate obtained so far.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best_(best_estimate), err_(error_estimate) {}

    double best_estimate() const noexcept { return best_; }
    double error_estimate() const noexcept { return err_; }

private:
    double best_;
    double err_;
};

/// Malformed textual input (distribution specs, config files, CLI values).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace cigf
