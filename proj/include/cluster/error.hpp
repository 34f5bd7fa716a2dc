#pragma once

#include <stdexcept>
#include <string>

namespace cluster {

// Precondition failures map to CLI exit code 2, internal invariant
// violations (Laurent failures and the like) to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual bool is_precondition() const { return true; }
};

class IndexError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

// Carries the offending pair (0-based) for "not skew-symmetrizable".
class NotSkewSymmetrizable : public Error {
public:
    NotSkewSymmetrizable(std::size_t i, std::size_t j, const std::string& what)
        : Error(what), i(i), j(j) {}
    std::size_t i, j;
};

// restrict_seed: b_ik != 0 with i outside I and k inside (0-based).
class RestrictionViolation : public Error {
public:
    RestrictionViolation(std::size_t i, std::size_t k, const std::string& what)
        : Error(what), i(i), k(k) {}
    std::size_t i, k;
};

class InternalError : public Error {
public:
    using Error::Error;
    bool is_precondition() const override { return false; }
};

// An exchange-relation division came out inexact.
class LaurentViolation : public InternalError {
public:
    using InternalError::InternalError;
};

}  // namespace cluster
