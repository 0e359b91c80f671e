#ifndef KCHA_ERRORS_HPP
#define KCHA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kcha {

// Base class for all errors raised by the toolkit.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text: expressions, JSON documents, braid words.
// Exit code 2 territory.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    explicit ParseError(const std::string& msg) : Error(msg), pos(0) {}
    std::size_t pos;
};

// Structurally valid input that violates a domain invariant.
struct ValidationError : Error {
    using Error::Error;
};

// Arithmetic misuse: division by zero, symtab mismatch, non-square matrix.
struct MathError : Error {
    using Error::Error;
};

// The requested computation is mathematically inapplicable to the input
// (degenerate branch, no usable cycle, unsolvable system). Exit code 3.
struct InapplicableError : Error {
    using Error::Error;
};

// Resource budget exceeded (Groebner timeout). Exit code 4.
struct TimeoutError : Error {
    using Error::Error;
};

} // namespace kcha

#endif
