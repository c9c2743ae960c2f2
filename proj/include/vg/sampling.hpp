#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vg/model.hpp"
#include "vg/rng.hpp"

namespace vg {

enum class Construction {
    time_change,
    gamma_difference,
    compound_poisson,
};

const char* construction_name(Construction c);

// Terminal values of the process plus RNG provenance. For the compound
// Poisson construction the output approximates the VG law at time t/2;
// comparison_time() returns the time the values should be benchmarked at.
struct SamplerOutput {
    std::vector<double> values;
    double t = 0.0;
    Construction construction = Construction::time_change;
    std::optional<double> gamma_trunc;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    double comparison_time() const {
        return construction == Construction::compound_poisson ? 0.5 * t : t;
    }
};

// i.i.d. Gamma(shape, rate) variates.
std::vector<double> sample_gamma(double shape, double rate, std::size_t n,
                                 RngHandle& rng);

// X_t = theta H + sqrt(2H) Z with H ~ Gamma(at, b); the Brownian density
// convention e^{-x^2/4t}/sqrt(4 pi t) means variance 2s at clock s.
SamplerOutput sample_vg_timechange(const VgParams& p, double t, std::size_t n,
                                   RngHandle& rng);

// X_t = G - L with the gain/loss rates from factor_params.
SamplerOutput sample_vg_difference(const VgParams& p, double t, std::size_t n,
                                   RngHandle& rng);

// Inverse of the truncated-jump survival function: solves
// E1(b y) = u * E1(b gamma_trunc) for y >= gamma_trunc. Exposed for tests.
double invert_jump_cdf(const GammaParams& p, double gamma_trunc, double u);

// i.i.d. jumps with density e^{-b y} / (y E1(b gamma_trunc)) on y >= gamma_trunc;
// the caller passes rate b = sqrt(b_vg) when targeting the VG process.
std::vector<double> sample_jump_y(const GammaParams& p, double gamma_trunc,
                                  std::size_t n, RngHandle& rng);

// Compound Poisson approximation: K ~ Poisson(t a E1(sqrt(b) gamma)), variate
// = sum of K Rademacher-signed jumps. Converges in law to X_{t/2} as gamma -> 0.
SamplerOutput sample_compound_poisson(const VgParams& p, double t,
                                      double gamma_trunc, std::size_t n,
                                      RngHandle& rng);

} // namespace vg
