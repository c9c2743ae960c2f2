#pragma once

#include <functional>
#include <vector>

#include "vg/errors.hpp"

namespace vg::quad {

struct QuadConfig {
    double abs_tol = 1e-9;
    double rel_tol = 1e-8;
    int max_subdivisions = 200;
    // Maximum fraction of abs_tol allowed to be discarded when truncating a
    // semi-infinite integral.
    double tail_cut = 1e-12;

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
};

using Integrand = std::function<double(double)>;

// Single (7,15) Gauss-Kronrod panel on [lo, hi].
QuadResult gauss_kronrod_15(const Integrand& f, double lo, double hi);

// Adaptive bisection until error <= max(abs_tol, rel_tol * |value|).
QuadResult integrate(const Integrand& f, double lo, double hi,
                     const QuadConfig& cfg = {});

// Same, but with declared interior breakpoints (kinks, scale changes).
QuadResult integrate_split(const Integrand& f, double lo, double hi,
                           std::vector<double> splits,
                           const QuadConfig& cfg = {});

// Integral over [lo, inf) via the substitution x = lo + u/(1-u).
QuadResult integrate_to_inf(const Integrand& f, double lo,
                            const QuadConfig& cfg = {});

} // namespace vg::quad
