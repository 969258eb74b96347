#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlie {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed term text. `position` is the 0-based offset of the offending character.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// A bracket with the wrong number of components for the requested arity.
struct ArityError : Error {
    using Error::Error;
};

/// Arguments outside an operation's domain (negative weight, unknown method, ...).
struct DomainError : Error {
    using Error::Error;
};

/// An instance exceeded a configured size ceiling.
struct CapacityError : Error {
    using Error::Error;
};

}  // namespace nlie
