#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylpi {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
public:
    explicit FieldMismatch(const std::string& what) : Error("field mismatch: " + what) {}
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

class NotMultihomogeneous : public Error {
public:
    NotMultihomogeneous() : Error("polynomial is not multihomogeneous") {}
};

class BadArity : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class NotPurelyX : public Error {
public:
    NotPurelyX() : Error("element has a nonzero y-degree") {}
};

class NotSemiReduced : public Error {
public:
    NotSemiReduced() : Error("bracket-monomial is not semi-reduced") {}
};

class NotReduced : public Error {
public:
    NotReduced() : Error("bracket-monomial is not reduced") {}
};

class DegreeTooSmall : public Error {
public:
    DegreeTooSmall() : Error("total degree must be at least 2") {}
};

class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// Parse failure; `position` is a 0-based byte offset into the input.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownVariable : public SyntaxError {
public:
    UnknownVariable(const std::string& name, std::size_t position)
        : SyntaxError("unknown variable '" + name + "'", position) {}
};

}  // namespace weylpi
