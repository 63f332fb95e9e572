#pragma once

#include <stdexcept>
#include <string>

namespace fermat {

/// Base class of every error thrown by this library. Thrown directly only
/// for internal consistency failures (an identity that must hold failed),
/// which callers should treat as defects, not as input problems.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Base class of the input-validation errors below.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An argument violates a documented precondition.
class PreconditionViolated : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Input exceeds the configured factorization bound.
class BoundExceeded : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A modulus that must be square-free has a square factor.
class NotSquareFree : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A coefficient normalized to zero where a positive value is required.
class DegenerateForm : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A length or side argument must be strictly positive.
class NonPositiveInput : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A floating-point evaluation left the representable range.
class Overflow : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A bounded search failed although a solution is guaranteed to exist
/// inside the bound. Always a defect, never a normal outcome.
class SearchExhausted : public Error {
public:
    using Error::Error;
};

} // namespace fermat
