#pragma once

#include <stdexcept>
#include <string>

namespace thermolen {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid physical parameters (non-positive beta, frequency, ...).
class InvalidParamsError : public Error {
public:
    using Error::Error;
};

/// Malformed or non-finite driving protocol.
class InvalidProtocolError : public Error {
public:
    using Error::Error;
};

/// Adaptive integration could not reach the requested accuracy.
class IntegrationError : public Error {
public:
    using Error::Error;
};

/// Unphysical Gaussian state (covariance below the Heisenberg floor).
class InvalidStateError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Mismatched grids or array shapes.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Position grid too small or too coarse for the requested object.
class GridError : public Error {
public:
    using Error::Error;
};

/// Numerical failure (eigensolver breakdown, discretization artifacts).
class NumericError : public Error {
public:
    using Error::Error;
};

/// Unreadable or inconsistent run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace thermolen
