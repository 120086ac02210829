#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alphawidth {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is the byte offset of the offending character
/// (graph6) or the 1-based line number (DIMACS, JSON certificates use 0).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Input larger than an exhaustive routine accepts.
class SizeCapError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold for the given input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An internal invariant that a theorem guarantees was observed to fail.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace alphawidth
