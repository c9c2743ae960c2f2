#include "vg/model.hpp"

#include <cmath>
#include <stdexcept>

#include "vg/special_fn.hpp"

namespace vg {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_theta_zero(const VgParams& p, const char* fn) {
    if (p.theta != 0.0)
        throw std::invalid_argument(std::string(fn) + ": closed form requires theta = 0");
}

// Prefactor C with p(t,x) = C * z^nu * K_nu(z), z = sqrt(b)|x|, nu = at - 1/2.
double log_prefactor(double a, double b, double t) {
    const double at = a * t;
    const double nu = at - 0.5;
    return at * std::log(b) - 0.5 * std::log(kPi) - special::ln_gamma(at) -
           nu * std::log(2.0) - nu * std::log(b);
}

} // namespace

void GammaParams::validate() const {
    if (!(a > 0) || !(b > 0))
        throw std::invalid_argument("GammaParams: a and b must be positive");
}

void VgParams::validate() const {
    if (!(a > 0) || !(b > 0) || !std::isfinite(theta))
        throw std::invalid_argument("VgParams: a, b must be positive and theta finite");
}

DensityValue gamma_density(const GammaParams& p, double t, double x) {
    p.validate();
    if (!(t > 0)) throw std::domain_error("gamma_density: t must be positive");
    const double at = p.a * t;
    if (x < 0) return {0.0, false};
    if (x == 0.0) {
        if (at < 1.0) return {0.0, true};
        if (at == 1.0) return {p.b, false};
        return {0.0, false};
    }
    const double lh = at * std::log(p.b) + (at - 1.0) * std::log(x) - p.b * x -
                      special::ln_gamma(at);
    return {std::exp(lh), false};
}

double gamma_laplace(const GammaParams& p, double t, double lam) {
    p.validate();
    if (!(t > 0)) throw std::domain_error("gamma_laplace: t must be positive");
    if (lam < 0) throw std::domain_error("gamma_laplace: lam must be nonnegative");
    return std::exp(-t * p.a * std::log1p(lam / p.b));
}

DensityValue vg_density(const VgParams& p, double t, double x) {
    p.validate();
    require_theta_zero(p, "vg_density");
    if (!(t > 0)) throw std::domain_error("vg_density: t must be positive");
    const double at = p.a * t;
    const double nu = at - 0.5;
    if (x == 0.0) {
        if (at < 0.5) return {0.0, true};
        if (at == 0.5)
            throw std::domain_error("vg_density: log-divergent limit at x = 0 for at = 1/2");
        // limit via K_nu(z) ~ Gamma(nu) 2^{nu-1} z^{-nu}
        const double lv = 0.5 * std::log(p.b) + special::ln_gamma(nu) -
                          special::ln_gamma(at) - std::log(2.0 * std::sqrt(kPi));
        return {std::exp(lv), false};
    }
    const double z = std::sqrt(p.b) * std::fabs(x);
    const double k = special::bessel_k(nu, z);
    const double v = std::exp(log_prefactor(p.a, p.b, t) + nu * std::log(z)) * k;
    return {v, false};
}

double vg_density_quadrature(const VgParams& p, double t, double x,
                             const quad::QuadConfig& q) {
    p.validate();
    if (!(t > 0)) throw std::domain_error("vg_density_quadrature: t must be positive");
    const double at = p.a * t;
    const double lga = special::ln_gamma(at);
    auto integrand = [&](double s) {
        const double d = x - p.theta * s;
        const double lg = -d * d / (4.0 * s) - 0.5 * std::log(4.0 * kPi * s);
        const double lh = at * std::log(p.b) + (at - 1.0) * std::log(s) - p.b * s - lga;
        return std::exp(lg + lh);
    };
    return quad::integrate_to_inf(integrand, 0.0, q).value;
}

std::complex<double> vg_char(const VgParams& p, double t, double xi) {
    p.validate();
    if (t < 0) throw std::domain_error("vg_char: t must be nonnegative");
    const std::complex<double> base(1.0 + xi * xi / p.b, -xi * p.theta / p.b);
    return std::exp(-p.a * t * std::log(base));
}

double levy_tail(const GammaParams& p, double x) {
    p.validate();
    if (!(x > 0)) throw std::domain_error("levy_tail: x must be positive");
    return p.a * special::exp_integral_e1(p.b * x);
}

FactorPair factor_params(const VgParams& p) {
    p.validate();
    const double disc = std::sqrt(0.25 * p.theta * p.theta + p.b);
    const double big = disc + 0.5 * std::fabs(p.theta);
    const double small = p.b / big; // disc - |theta|/2, without cancellation
    FactorPair f;
    f.gain = {p.a, p.theta >= 0 ? small : big};
    f.loss = {p.a, p.theta >= 0 ? big : small};
    return f;
}

double vg_density_dx(const VgParams& p, double t, double x, int order) {
    p.validate();
    require_theta_zero(p, "vg_density_dx");
    if (!(t > 0)) throw std::domain_error("vg_density_dx: t must be positive");
    if (x == 0.0) throw std::domain_error("vg_density_dx: derivative undefined at x = 0");
    if (order != 1 && order != 2)
        throw std::invalid_argument("vg_density_dx: order must be 1 or 2");
    const double at = p.a * t;
    const double nu = at - 0.5;
    const double sb = std::sqrt(p.b);
    const double z = sb * std::fabs(x);
    const double c = std::exp(log_prefactor(p.a, p.b, t));
    if (order == 1) {
        const double sign = x > 0 ? 1.0 : -1.0;
        return -sign * sb * c * std::pow(z, nu) * special::bessel_k(nu - 1.0, z);
    }
    const double f2 = std::pow(z, nu) * special::bessel_k(nu - 2.0, z) -
                      std::pow(z, nu - 1.0) * special::bessel_k(nu - 1.0, z);
    return p.b * c * f2;
}

} // namespace vg
