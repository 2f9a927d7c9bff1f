#pragma once

#include <stdexcept>
#include <string>

namespace landau {

/// Thrown when an input violates a mathematical precondition
/// (non-positive deficit parameter, unbound field configuration, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when a numerical procedure fails to reach its target accuracy.
/// `residual()` carries the last measured error estimate.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Thrown when a solver configuration cannot resolve the requested states.
class ConfigurationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace landau
