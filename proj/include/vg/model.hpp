#pragma once

#include <complex>

#include "vg/quadrature.hpp"

namespace vg {

// Gamma subordinator parameters: marginal at time t is Gamma(a*t, b).
struct GammaParams {
    double a = 1.0; // shape rate, 1/time
    double b = 1.0; // rate, 1/space

    void validate() const;
};

// Variance Gamma parameters; theta = 0 gives the driftless process.
struct VgParams {
    double a = 1.0;
    double b = 1.0;
    double theta = 0.0;

    void validate() const;
};

// Gain/loss decomposition X = G - L into two independent Gamma subordinators.
struct FactorPair {
    GammaParams gain;
    GammaParams loss;
};

// Pointwise density value. Divergent points carry an explicit tag instead of
// a floating-point infinity.
struct DensityValue {
    double value = 0.0;
    bool is_infinite = false;
};

// Gamma subordinator density h(t,x) = b^{at} x^{at-1} e^{-bx} / Gamma(at) for
// x > 0; zero for x < 0. At x = 0 returns the right limit, tagged infinite
// when at < 1.
DensityValue gamma_density(const GammaParams& p, double t, double x);

// int_0^inf e^{-lam x} h(t,x) dx = (b/(lam+b))^{at}.
double gamma_laplace(const GammaParams& p, double t, double lam);

// Closed-form driftless VG density in Bessel form. Requires theta == 0.
DensityValue vg_density(const VgParams& p, double t, double x);

// Subordination integral int_0^inf g^theta(s,x) h(t,s) ds; the canonical
// evaluator for the drifted density and the oracle for the closed form.
double vg_density_quadrature(const VgParams& p, double t, double x,
                             const quad::QuadConfig& q = {});

// Characteristic function (1 - i xi theta/b + xi^2/b)^{-at}, principal branch.
std::complex<double> vg_char(const VgParams& p, double t, double xi);

// Tail of the Levy measure: a * E1(b x).
double levy_tail(const GammaParams& p, double x);

// Gain/loss Gamma rates sqrt(theta^2/4 + b) -/+ theta/2, both with shape rate a.
FactorPair factor_params(const VgParams& p);

// Analytic first/second spatial derivative of the driftless closed-form
// density, via d/dz [z^nu K_nu(z)] = -z^nu K_{nu-1}(z). Requires x != 0.
double vg_density_dx(const VgParams& p, double t, double x, int order);

} // namespace vg
