#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace symcap {

/// Numerical procedure failed to produce a trustworthy result
/// (optimizer stall, root scan without brackets, ...). Carries diagnostics.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// A phase-space point sits on a stratum where two or more |q_j| tie for the
/// maximum, so the smooth region is undefined. The caller may resolve the
/// hand-over by look-ahead; the tying indices are carried along.
class TieStratumError : public std::runtime_error {
public:
    TieStratumError(const std::string& what, std::vector<int> tying)
        : std::runtime_error(what), indices(std::move(tying)) {}
    std::vector<int> indices;
};

/// Segment propagation found no turning event within the guard time.
/// The piecewise motion is periodic, so this indicates a logic fault.
class RunawayError : public std::runtime_error {
public:
    explicit RunawayError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace symcap
