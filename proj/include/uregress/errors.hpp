#pragma once

#include <stdexcept>
#include <string>

namespace uregress {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside its mathematical domain (e.g. alpha not in (0,1)).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid distribution / dataset / loss parameters.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// API misuse: dimension mismatch, wrong distribution family, etc.
class ContractError : public Error {
public:
    using Error::Error;
};

/// Parameter vector violates the model's constraint set.
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// Non-finite value in a numeric kernel.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Iteration or node cap exhausted without meeting a tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// No feasible solution exists / was found.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace uregress
