#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trendhedge {

/// Base class for runtime domain errors (bad input files, degenerate data).
/// Precondition violations on in-process arguments throw std::invalid_argument
/// instead, so callers can tell usage errors from runtime failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// The hedge-ratio initialization denominator vanished: the underlying's
/// trend grows at exactly the risk-free rate at t=0, so the initial hedge
/// ratio is indeterminate.
class SingularInitialization : public Error {
public:
    using Error::Error;
};

/// The underlying's trend is non-positive (or numerically zero) somewhere,
/// so the tracking formula cannot divide by it.
class DegenerateUnderlying : public Error {
public:
    using Error::Error;
};

/// The cost-of-carry denominator vanished at some sample.
class SingularCarryDenominator : public Error {
public:
    SingularCarryDenominator(const std::string& what, std::size_t index)
        : Error(what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

} // namespace trendhedge
