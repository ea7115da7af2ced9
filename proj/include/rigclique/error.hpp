#pragma once

#include <stdexcept>
#include <string>

namespace rigclique {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition or invariant (self-loop, bad id, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// Text input could not be decoded.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A configured search budget or size cap was hit; the computation refused to continue.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Never caused by valid input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace rigclique
