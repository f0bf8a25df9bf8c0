#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hull2d {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct CoincidentWithAnchor : Error {
    using Error::Error;
};

struct TooFewPoints : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct ZeroChunks : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line_no)
        : Error(what + " at line " + std::to_string(line_no)), line(line_no) {}
    std::size_t line;
};

}  // namespace hull2d
