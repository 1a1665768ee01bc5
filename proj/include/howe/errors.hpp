#pragma once

#include <stdexcept>
#include <string>

namespace howe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed literal or argument text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside the domain it is defined on
/// (wrong defect, symbol not in the expected family, non-regular input...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A symbol is not a member of the family S̄_Z of the given special symbol.
class NotInFamilyError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A structural statement about cores (disjointness, fiber shape) failed.
/// Raised only if an exhaustive check contradicts the expected structure.
class CoreStructureError : public Error {
public:
    using Error::Error;
};

}  // namespace howe
