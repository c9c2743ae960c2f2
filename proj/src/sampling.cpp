#include "vg/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "vg/errors.hpp"
#include "vg/special_fn.hpp"

namespace vg {

const char* construction_name(Construction c) {
    switch (c) {
        case Construction::time_change: return "time_change";
        case Construction::gamma_difference: return "gamma_difference";
        case Construction::compound_poisson: return "compound_poisson";
    }
    return "unknown";
}

std::vector<double> sample_gamma(double shape, double rate, std::size_t n,
                                 RngHandle& rng) {
    if (!(shape > 0) || !(rate > 0))
        throw std::invalid_argument("sample_gamma: shape and rate must be positive");
    std::vector<double> out(n);
    for (double& v : out) v = rng.gamma(shape, rate);
    return out;
}

SamplerOutput sample_vg_timechange(const VgParams& p, double t, std::size_t n,
                                   RngHandle& rng) {
    p.validate();
    if (!(t > 0)) throw std::domain_error("sample_vg_timechange: t must be positive");
    SamplerOutput out;
    out.construction = Construction::time_change;
    out.t = t;
    out.seed = rng.seed();
    out.stream = rng.stream();
    out.values.resize(n);
    const double at = p.a * t;
    for (double& v : out.values) {
        const double h = rng.gamma(at, p.b);
        v = p.theta * h + std::sqrt(2.0 * h) * rng.normal();
    }
    return out;
}

SamplerOutput sample_vg_difference(const VgParams& p, double t, std::size_t n,
                                   RngHandle& rng) {
    p.validate();
    if (!(t > 0)) throw std::domain_error("sample_vg_difference: t must be positive");
    const FactorPair fp = factor_params(p);
    SamplerOutput out;
    out.construction = Construction::gamma_difference;
    out.t = t;
    out.seed = rng.seed();
    out.stream = rng.stream();
    out.values.resize(n);
    const double at = p.a * t;
    for (double& v : out.values)
        v = rng.gamma(at, fp.gain.b) - rng.gamma(at, fp.loss.b);
    return out;
}

double invert_jump_cdf(const GammaParams& p, double gamma_trunc, double u) {
    p.validate();
    if (!(gamma_trunc > 0))
        throw std::domain_error("invert_jump_cdf: gamma_trunc must be positive");
    if (!(u > 0) || u > 1)
        throw std::domain_error("invert_jump_cdf: u must be in (0, 1]");
    const double z0 = p.b * gamma_trunc;
    const double log_target = std::log(u) + std::log(special::exp_integral_e1(z0));
    if (u == 1.0) return gamma_trunc;
    // bracket: E1 is strictly decreasing, E1(z) <= e^{-z} gives an upper bound
    double z_lo = z0;
    double z_hi = std::max(2.0 * z0, z0 - log_target + 1.0);
    while (std::log(special::exp_integral_e1(z_hi)) > log_target) z_hi *= 2.0;
    // safeguarded Newton on log E1(z) - log_target
    double z = 0.5 * (z_lo + z_hi);
    for (int it = 0; it < 100; ++it) {
        const double e1 = special::exp_integral_e1(z);
        const double g = std::log(e1) - log_target;
        if (g > 0)
            z_lo = z;
        else
            z_hi = z;
        const double dg = -std::exp(-z) / (z * e1); // d/dz log E1
        double z_next = z - g / dg;
        if (!(z_next > z_lo) || !(z_next < z_hi)) z_next = 0.5 * (z_lo + z_hi);
        if (std::fabs(z_next - z) <= 1e-14 * std::max(1.0, z)) return z_next / p.b;
        z = z_next;
    }
    throw ConvergenceError("invert_jump_cdf: Newton did not converge", z_hi - z_lo);
}

std::vector<double> sample_jump_y(const GammaParams& p, double gamma_trunc,
                                  std::size_t n, RngHandle& rng) {
    std::vector<double> out(n);
    for (double& v : out) v = invert_jump_cdf(p, gamma_trunc, rng.uniform());
    return out;
}

SamplerOutput sample_compound_poisson(const VgParams& p, double t,
                                      double gamma_trunc, std::size_t n,
                                      RngHandle& rng) {
    p.validate();
    if (p.theta != 0.0)
        throw std::invalid_argument("sample_compound_poisson: requires theta = 0");
    if (!(t > 0)) throw std::domain_error("sample_compound_poisson: t must be positive");
    if (!(gamma_trunc > 0))
        throw std::domain_error("sample_compound_poisson: gamma_trunc must be positive");
    const GammaParams jump{p.a, std::sqrt(p.b)};
    const double rate = t * p.a * special::exp_integral_e1(jump.b * gamma_trunc);
    SamplerOutput out;
    out.construction = Construction::compound_poisson;
    out.t = t;
    out.gamma_trunc = gamma_trunc;
    out.seed = rng.seed();
    out.stream = rng.stream();
    out.values.resize(n);
    for (double& v : out.values) {
        const std::uint64_t k = rng.poisson(rate);
        double sum = 0.0;
        for (std::uint64_t j = 0; j < k; ++j)
            sum += rng.rademacher() * invert_jump_cdf(jump, gamma_trunc, rng.uniform());
        v = sum;
    }
    return out;
}

} // namespace vg
