#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace facetree {

// Base of everything the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed rotation system, broken Euler formula, loops.
class StructuralError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its domain (wrong degree, not bipartite, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Caller supplied ids or constraints that do not make sense for the host.
class InputError : public Error {
public:
    using Error::Error;
};

// A certificate could not be converted because it violates the side conditions.
class ConversionError : public Error {
public:
    using Error::Error;
};

// Instance too large for exhaustive certification.
class ScaleError : public Error {
public:
    using Error::Error;
};

// Something that cannot happen for valid input happened.
class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace facetree
