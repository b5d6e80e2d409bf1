#pragma once

#include <stdexcept>
#include <string>

namespace qchernoff {

// Error taxonomy mirrors the CLI exit codes: validation 2, size cap 3,
// numerical failure 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class EmptyArcError : public ValidationError {
public:
    EmptyArcError() : ValidationError("empty Hellinger arc: supports are disjoint") {}
    using ValidationError::ValidationError;
};

class PreconditionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class SizeCapError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_ = 0.0;
};

}  // namespace qchernoff
