#pragma once

#include <complex>
#include <functional>

#include "vg/model.hpp"
#include "vg/quadrature.hpp"

namespace vg {

// Real-valued test function for the non-local operators, with a declared
// decay envelope |u(x)|, |u'(x)| <= decay_amp * exp(-decay_rate * |x|)
// (decay_rate = 0 declares a merely bounded function). Evaluators must be
// safe for concurrent calls; the operators never cache between applications.
struct Func1D {
    std::function<double(double)> value;
    std::function<double(double)> deriv;        // empty -> central differences
    std::function<double(double)> second_deriv; // empty -> central differences
    double decay_amp = 1.0;
    double decay_rate = 0.0;
    bool kink_at_origin = false; // quadratures place a breakpoint at x = 0

    double operator()(double x) const { return value(x); }
    double d(double x) const;
    double d2(double x) const;
};

// Generalized Weyl derivatives with kernel a E1(b s):
//   weyl_plus  = int_0^inf u'(x-s) a E1(b s) ds
//   weyl_minus = -int_0^inf u'(x+s) a E1(b s) ds
double weyl_plus(const GammaParams& p, const Func1D& u, double x,
                 const quad::QuadConfig& q = {});
double weyl_minus(const GammaParams& p, const Func1D& u, double x,
                  const quad::QuadConfig& q = {});

// Phillips operator a int_0^inf (G_y u(x) - u(x)) e^{-by}/y dy, where G_y is
// the heat semigroup with kernel e^{-x^2/4y}/sqrt(4 pi y).
double phillips_apply(const GammaParams& p, const Func1D& u, double x,
                      const quad::QuadConfig& q = {});

// Fourier symbols: a ln(1 -/+ i xi / b) and -a ln(1 + xi^2 / b).
std::complex<double> weyl_plus_symbol(const GammaParams& p, double xi);
std::complex<double> weyl_minus_symbol(const GammaParams& p, double xi);
double phillips_symbol(const GammaParams& p, double xi);

} // namespace vg
