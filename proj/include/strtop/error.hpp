#pragma once

#include <stdexcept>
#include <string>

namespace strtop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands live over different graded bases.
class BasisMismatchError : public Error {
public:
    using Error::Error;
};

/// A structure constant violates the degree bookkeeping of its algebra.
class DegreeError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The algebra has a shape the operation cannot handle (e.g. multi-term
/// basis products handed to the weight-function cocycle model).
class UnsupportedStructureError : public Error {
public:
    using Error::Error;
};

/// Group axioms fail; the message names the witness.
class GroupError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Sector data that cannot come from a genuine orbifold.
class InconsistentSectorError : public Error {
public:
    using Error::Error;
};

}  // namespace strtop
