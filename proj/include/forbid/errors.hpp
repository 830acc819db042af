#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace forbid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid input data (files, layouts, degenerate metric inputs).
class InputError : public Error {
public:
    using Error::Error;
};

/// The solver could not produce a result.
class SolverError : public Error {
public:
    using Error::Error;
};

/// Two overlapping nodes share the exact same center, so no uniform scale separates them.
class CoincidentCentersError : public Error {
public:
    CoincidentCentersError(std::size_t first, std::size_t second)
        : Error("coincident centers: nodes " + std::to_string(first) + " and " +
                std::to_string(second)),
          first_(first),
          second_(second) {}

    std::size_t first() const { return first_; }
    std::size_t second() const { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

}  // namespace forbid
