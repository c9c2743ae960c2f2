#pragma once

namespace vg::special {

struct Accuracy {
    double rel_tol = 1e-12;
    int max_terms = 500;

    void validate() const;
};

inline constexpr double euler_gamma = 0.57721566490153286061;

// ln Gamma(x) for x > 0.
double ln_gamma(double x);

// Gamma(x) for x > 0.
double gamma_fn(double x);

// Modified Bessel function of the second kind K_nu(x), x > 0.
// Even in the order, so nu is normalized to |nu| at entry.
// Throws std::range_error on overflow instead of returning infinity.
double bessel_k(double nu, double x, const Accuracy& acc = {});

// Exponential integral E1(x) = int_x^inf exp(-z)/z dz, x > 0.
double exp_integral_e1(double x, const Accuracy& acc = {});

} // namespace vg::special
