#pragma once

#include <cstdint>
#include <random>

namespace vg {

// Deterministic pseudo-random stream addressed by (seed, stream). All variate
// transforms are implemented here rather than via std distributions, so a
// fixed (seed, stream) reproduces the same sequence on every platform.
class RngHandle {
public:
    explicit RngHandle(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    double uniform();  // open interval (0, 1)
    double normal();   // standard normal (Box-Muller)
    double gamma(double shape, double rate); // Marsaglia-Tsang, any shape > 0
    std::uint64_t poisson(double mean);
    int rademacher(); // +1 or -1 with equal probability

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

} // namespace vg
