#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperlip {

/// Raised when the caller violates an operation's contract: malformed input,
/// dimension mismatch, an instance outside the hypotheses of the construction.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a mathematical guarantee could not be delivered (an iteration
/// that does not contract, a geometric assertion that failed).
class ContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public InputError {
public:
    DimensionMismatch(std::size_t expected, std::size_t got);
    std::size_t expected;
    std::size_t got;
};

/// lower_i > upper_i at the queried point.
class InconsistentBounds : public InputError {
public:
    InconsistentBounds(std::size_t coordinate, std::vector<double> at, double lower, double upper);
    std::size_t coordinate;
    std::vector<double> at;
    double lower;
    double upper;
};

/// A pair of indices at which the Lipschitz inequality fails.
class NotLipschitz : public InputError {
public:
    NotLipschitz(std::size_t first, std::size_t second, double value_gap, double allowed);
    std::size_t first;
    std::size_t second;
    double value_gap;
    double allowed;
};

class Unsupported : public InputError {
public:
    using InputError::InputError;
};

class MaxSweepsExceeded : public ContractError {
public:
    MaxSweepsExceeded(std::size_t sweeps, double last_window);
    std::size_t sweeps;
    double last_window;
};

}  // namespace hyperlip
