#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fde {

/// Raised when a configuration document is malformed or violates a field
/// invariant. The message carries the offending field path.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when mu*rho^2 is too close to 2, which makes the boundary-value
/// representation singular.
class singular_parameter_error : public std::runtime_error {
public:
    explicit singular_parameter_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised by the fixed-point iteration when residuals grow persistently.
/// Carries the residual history observed up to the point of failure.
class divergence_error : public std::runtime_error {
public:
    divergence_error(const std::string& msg, std::vector<double> history)
        : std::runtime_error(msg), residual_history(std::move(history)) {}

    std::vector<double> residual_history;
};

/// Raised when the stability constant product G*L is not below 1.
class stability_condition_error : public std::runtime_error {
public:
    explicit stability_condition_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a right-hand-side evaluation produces a non-finite value.
class evaluation_error : public std::runtime_error {
public:
    explicit evaluation_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fde
