#pragma once

#include <stdexcept>
#include <string>

namespace sinv {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable facet lists, bad ring selectors, unreadable files.
class InputError : public Error {
public:
    using Error::Error;
};

/// Valid input violating an operation's precondition (not a face, wrong ring,
/// non-manifold where a manifold is required, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace sinv
