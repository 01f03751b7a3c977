#pragma once

#include <stdexcept>
#include <string>

namespace lieloc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Structure constants that violate antisymmetry or the Jacobi identity,
/// duplicate labels, or an otherwise malformed algebra description.
class InvalidAlgebra : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A broken internal invariant (for example a derivation escaping a
/// candidate space). Never expected on valid inputs.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace lieloc
