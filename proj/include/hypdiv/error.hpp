#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypdiv {

/// Base of every exception thrown by the library.
struct Error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Two vectors (or a vector and an instance) disagree on the dimension.
struct DimensionError : Error
{
    using Error::Error;
};

/// A caller broke an operation's precondition.
struct ContractError : Error
{
    using Error::Error;
};

/// Malformed text input. `line` is 1-based; 0 when the location is unknown.
struct ParseError : Error
{
    ParseError(std::size_t line, const std::string & what) :
        Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line(line)
    {
    }

    std::size_t line;
};

} // namespace hypdiv
