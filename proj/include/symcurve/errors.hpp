#pragma once

#include <stdexcept>
#include <string>

namespace symcurve {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient fields.
class FieldMismatchError : public Error {
public:
    using Error::Error;
};

/// An exact monomial division hit a non-divisible term.  The message names
/// the first offending term in canonical order.
class NotDivisibleError : public Error {
public:
    NotDivisibleError(const std::string& term, const std::string& divisor)
        : Error("term " + term + " is not divisible by " + divisor), term_(term) {}
    const std::string& term() const { return term_; }

private:
    std::string term_;
};

class ZeroPolynomialError : public Error {
public:
    ZeroPolynomialError() : Error("operation undefined for the zero polynomial") {}
};

class WeightMismatchError : public Error {
public:
    using Error::Error;
};

class WrongTypeError : public Error {
public:
    using Error::Error;
};

class LevelOutOfRangeError : public Error {
public:
    using Error::Error;
};

class InconsistentRelationsError : public Error {
public:
    using Error::Error;
};

class SearchBoundExceededError : public Error {
public:
    using Error::Error;
};

class MalformedStaircaseError : public Error {
public:
    using Error::Error;
};

/// A theorem-predicted verdict disagreed with a solver verdict.  This is the
/// artifact's strongest self-test and always aborts the computation.
class InternalMismatchError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace symcurve
