#pragma once

#include <stdexcept>
#include <string>

namespace tricomi {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments outside the domain an operation accepts.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Gamma-type pole: argument at a nonpositive integer.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Point outside the parameter region attached to a claim or identity.
/// Kept distinct from a failed check.
class RegionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Series or quadrature did not reach the requested accuracy within budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Terms of a combination cancelled beyond the available precision.
class CancellationError : public Error {
public:
    using Error::Error;
};

/// Two independent evaluation routes disagree by more than their budgets.
class DisagreementError : public Error {
public:
    using Error::Error;
};

}  // namespace tricomi
