#pragma once

#include <stdexcept>

namespace propg {

// Error taxonomy; the CLI maps each class to a distinct exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mixing values from incompatible engines, primes, or precisions.
class ConfigMismatchError : public Error {
public:
    using Error::Error;
};

// Truncation class, generator count, word count, or 64-bit modulus
// capacity exceeded.
class BudgetError : public Error {
public:
    using Error::Error;
};

// An input does not carry enough p-adic digits for an exact result.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// Valuation of zero, inverse of a non-unit, and similar domain violations.
class DomainError : public Error {
public:
    using Error::Error;
};

// A state the underlying theory rules out; aborts loudly rather than
// returning a wrong value.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace propg
