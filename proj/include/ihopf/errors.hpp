// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ihopf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two scalars (or containers of scalars) from different fields were combined.
struct FieldMismatchError : Error {
    using Error::Error;
};

// Invalid value for an operation: division by zero, singular matrix,
// non-prime modulus, dimension mismatch, violated precondition.
struct DomainError : Error {
    using Error::Error;
};

// Malformed serialization input; carries 1-based line and column.
struct ParseError : Error {
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& msg, std::size_t line_, std::size_t column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

// A construction whose result is guaranteed by theorem failed its
// post-construction check; indicates bad input validation or an index bug.
struct PostconditionError : Error {
    using Error::Error;
};

}  // namespace ihopf
