#pragma once

#include <stdexcept>
#include <string>

namespace ppacf {

/// Contract violations: bad arguments, mismatched regions, malformed input.
/// Mapped to exit code 1 by the CLI.
class invalid_argument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Data-driven degeneracies: empty bins, nonpositive covariance ratios,
/// degenerate variance, failed factorizations. Mapped to exit code 2.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ppacf
