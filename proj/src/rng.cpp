#include "vg/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace vg {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

RngHandle::RngHandle(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream),
      engine_(splitmix64(seed ^ splitmix64(stream))) {}

double RngHandle::uniform() {
    // 52 high bits plus a half-ulp offset keeps the value strictly inside (0,1).
    return (static_cast<double>(engine_() >> 12) + 0.5) * 0x1p-52;
}

double RngHandle::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_normal_ = r * std::sin(kTwoPi * u2);
    has_cached_normal_ = true;
    return r * std::cos(kTwoPi * u2);
}

double RngHandle::gamma(double shape, double rate) {
    if (!(shape > 0) || !(rate > 0))
        throw std::invalid_argument("RngHandle::gamma: shape and rate must be positive");
    if (shape < 1.0) {
        // boost: Gamma(shape) = Gamma(shape+1) * U^{1/shape}
        const double u = uniform();
        return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
}

std::uint64_t RngHandle::poisson(double mean) {
    if (mean < 0 || !std::isfinite(mean))
        throw std::invalid_argument("RngHandle::poisson: mean must be finite and >= 0");
    // Knuth's product method; large means are split into <= 30 chunks so the
    // exponentials stay away from underflow. Cost is O(mean), fine at the
    // logarithmic rates used here.
    std::uint64_t total = 0;
    while (mean > 0) {
        const double chunk = std::min(mean, 30.0);
        mean -= chunk;
        const double limit = std::exp(-chunk);
        std::uint64_t k = 0;
        double prod = uniform();
        while (prod > limit) {
            ++k;
            prod *= uniform();
        }
        total += k;
    }
    return total;
}

int RngHandle::rademacher() {
    return (engine_() >> 63) ? 1 : -1;
}

} // namespace vg
