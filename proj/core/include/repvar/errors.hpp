#pragma once

#include <stdexcept>
#include <string>

namespace repvar {

// Bad input: out-of-range parameters, malformed files, broken invariants.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numerically meaningful input that fails a tolerance check (e.g. a point
// that is not on a variety, a residual above threshold).
class tolerance_error : public std::runtime_error {
public:
    explicit tolerance_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace repvar
