#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace qdet {

// Invalid argument for a mathematical operation (x <= 0 for Y1/K1, bad
// interval ordering, zero UV damping where one is mandatory, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// An adaptive integral ran out of panels, or a principal-value excision
// failed its stability check.  Carries the best value obtained so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, std::complex<double> best,
                     double err_estimate)
        : std::runtime_error(msg), best_value(best), error_estimate(err_estimate) {}
    std::complex<double> best_value;
    double error_estimate;
};

// An integrand returned a non-finite value.
class IntegrandError : public std::runtime_error {
public:
    IntegrandError(const std::string& msg, double where)
        : std::runtime_error(msg), abscissa(where) {}
    double abscissa;
};

// Scenario-file syntax or validation failure, anchored to a source line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line_number)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + msg),
          line(line_number) {}
    int line;
};

} // namespace qdet
