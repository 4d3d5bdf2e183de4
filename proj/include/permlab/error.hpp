#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument is outside the operation's domain (bad vertex, bad family parameter, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. `position` is a line number for line-oriented formats
/// and a byte offset for graph6.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// The input is outside the matrix class for which a property is claimed.
class InputClassError : public Error {
public:
    using Error::Error;
};

/// The matrix is larger than the configured permanent size cap.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// A closure decomposition does not rebuild the graph it claims to.
class StructuralError : public Error {
public:
    using Error::Error;
};

}  // namespace permlab
