#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "vg/operators.hpp"

using namespace vg;

namespace {

Func1D gaussian_bump() {
    Func1D u;
    u.value = [](double x) { return std::exp(-x * x); };
    u.deriv = [](double x) { return -2.0 * x * std::exp(-x * x); };
    u.second_deriv = [](double x) { return (4.0 * x * x - 2.0) * std::exp(-x * x); };
    u.decay_amp = 3.0;
    u.decay_rate = 2.0;
    return u;
}

Func1D wave_cos(double xi) {
    Func1D u;
    u.value = [xi](double x) { return std::cos(xi * x); };
    u.deriv = [xi](double x) { return -xi * std::sin(xi * x); };
    u.second_deriv = [xi](double x) { return -xi * xi * std::cos(xi * x); };
    u.decay_amp = std::max(1.0, xi * xi);
    return u;
}

Func1D wave_sin(double xi) {
    Func1D u;
    u.value = [xi](double x) { return std::sin(xi * x); };
    u.deriv = [xi](double x) { return xi * std::cos(xi * x); };
    u.second_deriv = [xi](double x) { return -xi * xi * std::sin(xi * x); };
    u.decay_amp = std::max(1.0, xi * xi);
    return u;
}

} // namespace

TEST_CASE("symbols: closed values and conjugacy") {
    const GammaParams p{1.5, 2.0};
    for (double xi : {-3.0, -0.4, 0.0, 1.0, 7.0}) {
        const std::complex<double> sp = weyl_plus_symbol(p, xi);
        const std::complex<double> sm = weyl_minus_symbol(p, xi);
        CHECK(std::abs(sp - std::conj(sm)) < 1e-15);
        CHECK(sp.real() ==
              doctest::Approx(0.5 * p.a * std::log1p(xi * xi / (p.b * p.b))).epsilon(1e-14));
        CHECK(sp.imag() == doctest::Approx(-p.a * std::atan(xi / p.b)).epsilon(1e-14));
        CHECK(phillips_symbol(p, xi) ==
              doctest::Approx(-p.a * std::log1p(xi * xi / p.b)).epsilon(1e-14));
    }
    CHECK(weyl_plus_symbol({1, 1}, 0.0) == std::complex<double>(0.0, 0.0));
    CHECK(phillips_symbol({1, 1}, 1.0) == doctest::Approx(-std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("symbol identity between the two operator representations") {
    // Weyl pair at rate sqrt(b) plus the subordinated Laplacian at rate b
    // must cancel on every frequency.
    for (const GammaParams p : {GammaParams{1, 1}, {0.7, 2.3}, {2.1, 0.5}}) {
        const GammaParams root{p.a, std::sqrt(p.b)};
        for (int i = 0; i <= 100; ++i) {
            const double xi = -10.0 + 0.2 * i;
            const std::complex<double> sum = weyl_plus_symbol(root, xi) +
                                             weyl_minus_symbol(root, xi) +
                                             phillips_symbol(p, xi);
            CHECK(std::abs(sum) < 1e-13);
        }
    }
}

TEST_CASE("weyl operators annihilate constants") {
    Func1D c;
    c.value = [](double) { return 4.2; };
    c.deriv = [](double) { return 0.0; };
    c.decay_amp = 5.0;
    CHECK(std::fabs(weyl_plus({1.3, 0.8}, c, 0.7)) < 1e-12);
    CHECK(std::fabs(weyl_minus({1.3, 0.8}, c, -1.1)) < 1e-12);
    CHECK(std::fabs(phillips_apply({1.3, 0.8}, c, 0.3)) < 1e-10);
}

TEST_CASE("weyl action on plane waves") {
    // On e^{i xi x} the plus/minus kernels act as multiplication by
    // m(xi) = a ln(1 + i xi / b) and its conjugate; taking real parts gives
    // the cos/sin mixing below.
    const GammaParams p{1.2, 1.7};
    for (double xi : {0.5, 1.0, 2.5}) {
        const std::complex<double> m(0.5 * p.a * std::log1p(xi * xi / (p.b * p.b)),
                                     p.a * std::atan(xi / p.b));
        const Func1D uc = wave_cos(xi);
        const Func1D us = wave_sin(xi);
        for (double x : {-0.9, 0.0, 1.3}) {
            const double expect_p =
                m.real() * std::cos(xi * x) - m.imag() * std::sin(xi * x);
            const double expect_m =
                m.real() * std::cos(xi * x) + m.imag() * std::sin(xi * x);
            CHECK(weyl_plus(p, uc, x) == doctest::Approx(expect_p).epsilon(5e-8));
            CHECK(weyl_minus(p, uc, x) == doctest::Approx(expect_m).epsilon(5e-8));
            // sin picks up the conjugate mixing
            const double expect_ps =
                m.real() * std::sin(xi * x) + m.imag() * std::cos(xi * x);
            CHECK(weyl_plus(p, us, x) == doctest::Approx(expect_ps).epsilon(5e-8));
        }
    }
}

TEST_CASE("weyl_plus against the difference-kernel oracle") {
    // Integration by parts turns the kernel into a E1'(bs); the resulting
    //   a int_0^inf (u(x) - u(x-s)) e^{-bs}/s ds
    // is evaluated with an unrelated adaptive Simpson rule.
    const GammaParams p{1.4, 0.9};
    const Func1D u = gaussian_bump();
    for (double x : {0.7, -0.3, 2.0}) {
        auto integrand = [&](double s) {
            if (s < 1e-10) return u.deriv(x) * std::exp(-p.b * s);
            return (u.value(x) - u.value(x - s)) * std::exp(-p.b * s) / s;
        };
        const double oracle = p.a * oracles::simpson(integrand, 0.0, 80.0 / p.b, 1e-12);
        CHECK(weyl_plus(p, u, x) == doctest::Approx(oracle).epsilon(1e-6));
    }
}

TEST_CASE("weyl reflection property") {
    const GammaParams p{0.9, 1.6};
    const Func1D u = gaussian_bump(); // even, so reflection maps plus to minus
    for (double x : {-1.2, 0.4, 1.8}) {
        CHECK(weyl_minus(p, u, x) == doctest::Approx(weyl_plus(p, u, -x)).epsilon(1e-8));
    }
    // asymmetric function: compare against explicitly reflected copy
    Func1D v;
    v.value = [](double x) { return std::exp(-(x - 0.5) * (x - 0.5)); };
    v.deriv = [](double x) { return -2.0 * (x - 0.5) * std::exp(-(x - 0.5) * (x - 0.5)); };
    v.decay_amp = 6.0;
    v.decay_rate = 1.0;
    Func1D vr;
    vr.value = [&](double x) { return v.value(-x); };
    vr.deriv = [&](double x) { return -v.deriv(-x); };
    vr.decay_amp = 6.0;
    vr.decay_rate = 1.0;
    CHECK(weyl_minus(p, v, 0.8) == doctest::Approx(weyl_plus(p, vr, -0.8)).epsilon(1e-8));
}

TEST_CASE("phillips action on plane waves") {
    const GammaParams p{1.0, 1.0};
    const Func1D u = wave_cos(1.0); // xi^2 = b
    CHECK(phillips_apply(p, u, 0.0) == doctest::Approx(-std::log(2.0)).epsilon(1e-7));
    const GammaParams p2{0.8, 2.0};
    for (double xi : {0.7, 1.5}) {
        const Func1D uc = wave_cos(xi);
        const double mult = -p2.a * std::log1p(xi * xi / p2.b);
        for (double x : {-0.6, 0.9}) {
            CHECK(phillips_apply(p2, uc, x) ==
                  doctest::Approx(mult * std::cos(xi * x)).epsilon(1e-6));
        }
    }
}

TEST_CASE("linearity and translation equivariance") {
    const GammaParams p{1.1, 1.3};
    const Func1D u = gaussian_bump();
    const Func1D s = wave_sin(0.8);
    Func1D combo;
    combo.value = [&](double x) { return 2.0 * u.value(x) - 3.0 * s.value(x); };
    combo.deriv = [&](double x) { return 2.0 * u.deriv(x) - 3.0 * s.deriv(x); };
    combo.decay_amp = 2.0 * u.decay_amp + 3.0 * s.decay_amp;
    const double x0 = 0.35;
    CHECK(weyl_plus(p, combo, x0) ==
          doctest::Approx(2.0 * weyl_plus(p, u, x0) - 3.0 * weyl_plus(p, s, x0))
              .epsilon(1e-8));
    CHECK(phillips_apply(p, combo, x0) ==
          doctest::Approx(2.0 * phillips_apply(p, u, x0) - 3.0 * phillips_apply(p, s, x0))
              .epsilon(1e-6));

    // shifting the function then evaluating equals evaluating at the shifted point
    const double c = 0.6;
    Func1D shifted;
    shifted.value = [&](double x) { return u.value(x - c); };
    shifted.deriv = [&](double x) { return u.deriv(x - c); };
    shifted.decay_amp = u.decay_amp * std::exp(u.decay_rate * std::fabs(c));
    shifted.decay_rate = u.decay_rate;
    CHECK(weyl_plus(p, shifted, 1.0) == doctest::Approx(weyl_plus(p, u, 1.0 - c)).epsilon(1e-8));
    CHECK(weyl_minus(p, shifted, 1.0) == doctest::Approx(weyl_minus(p, u, 1.0 - c)).epsilon(1e-8));
}

TEST_CASE("physical-space identity between the two representations") {
    // Same cancellation as the symbol test, now on a concrete function:
    // Weyl pair at rate sqrt(b) plus subordinated Laplacian at rate b.
    const Func1D u = gaussian_bump();
    std::mt19937_64 gen(12345);
    std::uniform_real_distribution<double> unif(0.5, 3.0);
    for (int trial = 0; trial < 5; ++trial) {
        const double a = unif(gen), b = unif(gen);
        const GammaParams full{a, b};
        const GammaParams root{a, std::sqrt(b)};
        for (double x : {-1.0, 0.0, 0.5, 2.0}) {
            const double total = phillips_apply(full, u, x) + weyl_plus(root, u, x) +
                                 weyl_minus(root, u, x);
            CHECK(std::fabs(total) < 1e-5);
        }
    }
}

TEST_CASE("finite-difference fallback for missing derivatives") {
    Func1D u;
    u.value = [](double x) { return std::exp(-x * x); };
    u.decay_amp = 3.0;
    u.decay_rate = 2.0;
    CHECK(u.d(0.4) == doctest::Approx(-0.8 * std::exp(-0.16)).epsilon(1e-7));
    CHECK(u.d2(0.4) == doctest::Approx((0.64 - 2.0) * std::exp(-0.16)).epsilon(1e-5));
    const Func1D full = gaussian_bump();
    CHECK(weyl_plus({1, 1}, u, 0.4) == doctest::Approx(weyl_plus({1, 1}, full, 0.4)).epsilon(1e-6));
}
