#pragma once

#include <stdexcept>
#include <string>

namespace oscilkit {

/// Thrown when a numerical procedure cannot meet its accuracy target
/// (quadrature non-convergence, root residual out of bounds, ...).
/// The message carries the achieved estimate as diagnostics.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace oscilkit
