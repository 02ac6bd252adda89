#pragma once

#include <stdexcept>
#include <string>

namespace asianpath {

/// Invalid model or contract parameters (negative volatility, non-positive strike, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A formula was evaluated outside the region where it is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// |rho| = 1 reached an operation that divides by (1 - rho^2).
class DegenerateCorrelationError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Inconsistent simulation or pricing configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace asianpath
