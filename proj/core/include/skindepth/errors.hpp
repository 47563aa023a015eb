#pragma once

#include <stdexcept>
#include <string>

namespace skindepth {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unknown preset or missing file.
struct NotFoundError : Error {
    using Error::Error;
};

// Input outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Malformed input file; carries a 1-based line number.
struct ParseError : Error {
    ParseError(const std::string& what, long line)
        : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    long line;
};

// Requested combination is deliberately not provided.
struct UnsupportedError : Error {
    using Error::Error;
};

// Complex-log argument landed on the branch cut.
struct BranchCutError : Error {
    using Error::Error;
};

// Division by a vanishing response function.
struct PoleError : Error {
    using Error::Error;
};

}  // namespace skindepth
