#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "collatz/u128.hpp"

namespace collatz {

// Base of everything the library throws for bad inputs or failed dynamics.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 3n+1 would not fit in 128 bits.
class OverflowError : public Error {
public:
    explicit OverflowError(u128 value)
        : Error("arithmetic overflow: 3n+1 exceeds 128 bits for n = " + to_string(value)), value_(value) {}
    u128 value() const noexcept { return value_; }

private:
    u128 value_;
};

// Step cap reached before the orbit hit 1. Carries the partial orbit.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(u128 start, std::vector<u128> partial)
        : Error("no convergence to 1 within " + std::to_string(partial.empty() ? 0 : partial.size() - 1) +
                " steps for n = " + to_string(start)),
          start_(start), partial_(std::move(partial)) {}
    u128 start() const noexcept { return start_; }
    const std::vector<u128>& partial() const noexcept { return partial_; }

private:
    u128 start_;
    std::vector<u128> partial_;
};

// Malformed parity vector (e.g. a C-vector with "11" in it).
class StructureError : public Error {
public:
    using Error::Error;
};

// Caller broke an operation's documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace collatz
