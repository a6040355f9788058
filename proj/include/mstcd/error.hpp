#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mstcd {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
          lhs_(lhs), rhs_(rhs) {}

    std::size_t lhs() const noexcept { return lhs_; }
    std::size_t rhs() const noexcept { return rhs_; }

private:
    std::size_t lhs_;
    std::size_t rhs_;
};

// Zero-length edge (both endpoints coincide).
class DegenerateEdge : public Error {
public:
    DegenerateEdge() : Error("degenerate edge: endpoints coincide") {}
};

// Invalid model or experiment parameter.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Malformed or unsupported input data.
class DataError : public Error {
public:
    using Error::Error;
};

}  // namespace mstcd
