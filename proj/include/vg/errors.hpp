#pragma once

#include <stdexcept>
#include <string>

namespace vg {

// Thrown when an adaptive quadrature or iterative solver fails to reach the
// requested tolerance. Carries the best error estimate available at failure.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}

    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

} // namespace vg
