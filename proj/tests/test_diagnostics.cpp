#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "vg/diagnostics.hpp"

using namespace vg;

TEST_CASE("ks critical coefficient") {
    CHECK(ks_critical(0.001) == doctest::Approx(1.9495).epsilon(1e-4));
    CHECK(ks_critical(0.05) == doctest::Approx(1.3581).epsilon(1e-4));
    CHECK(ks_critical(0.001) > ks_critical(0.01));
    CHECK_THROWS_AS(ks_critical(0.0), std::invalid_argument);
    CHECK_THROWS_AS(ks_critical(1.0), std::invalid_argument);
}

TEST_CASE("one-sample statistic by hand") {
    auto unif = [](double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); };
    const KsReport r = ks_one_sample({0.9, 0.1, 0.5}, unif); // unsorted on purpose
    CHECK(r.statistic == doctest::Approx(7.0 / 30.0).epsilon(1e-14));
    CHECK(r.n == 3);
    CHECK_FALSE(r.m.has_value());
    CHECK(r.threshold == doctest::Approx(ks_critical(ks_default_alpha) / std::sqrt(3.0)));
    CHECK(r.pass); // 7/30 < 1.9495/sqrt(3)

    // point mass against a continuous cdf never fits
    const KsReport d = ks_one_sample(std::vector<double>(100, 0.5), unif);
    CHECK(d.statistic >= 0.5);
    CHECK_FALSE(d.pass);

    CHECK_THROWS_AS(ks_one_sample({}, unif), std::invalid_argument);
}

TEST_CASE("two-sample statistic by hand") {
    const KsReport same = ks_two_sample({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0});
    CHECK(same.statistic == doctest::Approx(0.0));
    CHECK(same.m.has_value());
    CHECK(*same.m == 3);

    const KsReport far = ks_two_sample({1.0, 2.0, 3.0}, {10.0, 11.0, 12.0});
    CHECK(far.statistic == doctest::Approx(1.0));
    // at n=m=3 the asymptotic threshold exceeds 1, so use larger disjoint
    // samples to exercise the fail path
    std::vector<double> lo(100), hi(100);
    for (int i = 0; i < 100; ++i) {
        lo[i] = i;
        hi[i] = 1000 + i;
    }
    CHECK_FALSE(ks_two_sample(lo, hi).pass);

    const KsReport inter = ks_two_sample({1.0, 3.0, 5.0}, {2.0, 4.0, 6.0});
    CHECK(inter.statistic == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    const KsReport uneven = ks_two_sample({1.0}, {2.0, 3.0});
    CHECK(uneven.statistic == doctest::Approx(1.0));
}

TEST_CASE("empirical characteristic function") {
    CHECK(empirical_char({0.0, 0.0}, 3.7) == std::complex<double>(1.0, 0.0));
    const std::complex<double> v = empirical_char({-1.0, 1.0}, 1.5707963267948966);
    CHECK(std::abs(v) < 1e-15);
    const std::complex<double> w = empirical_char({2.0}, 0.5);
    CHECK(w.real() == doctest::Approx(std::cos(1.0)).epsilon(1e-15));
    CHECK(w.imag() == doctest::Approx(std::sin(1.0)).epsilon(1e-15));
    CHECK(empirical_char({1.0, 2.0, -0.5}, 0.0) == std::complex<double>(1.0, 0.0));
}

TEST_CASE("closed-form cdf values") {
    const VgParams p{1, 1, 0};
    CHECK(vg_cdf(p, 1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(vg_cdf(p, 1.0, 1.0) ==
          doctest::Approx(1.0 - 0.5 * std::exp(-1.0)).epsilon(1e-10));
    CHECK(vg_cdf(p, 1.0, -1.0) == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-10));
    CHECK(vg_cdf(p, 1.0, 40.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(vg_cdf(p, 1.0, -40.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(vg_cdf({1, 1, 0.5}, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("cdf table interpolates the quadrature cdf") {
    const VgParams p{1.4, 2.0, 0.0};
    const double t = 1.0;
    const VgCdfTable table(p, t);
    for (double x : {-5.0, -1.7, -0.3, 0.0, 0.2, 0.9, 2.4, 8.0}) {
        CHECK(std::fabs(table(x) - vg_cdf(p, t, x)) < 1e-6);
    }
    // monotone and properly normalized at the ends
    double prev = table(-30.0);
    CHECK(prev < 1e-8);
    for (double x = -6.0; x <= 6.0; x += 0.1) {
        const double cur = table(x);
        CHECK(cur >= prev - 1e-12);
        prev = cur;
    }
    CHECK(table(30.0) > 1.0 - 1e-8);

    // at <= 1/2 has an unbounded density at the origin: table refuses
    CHECK_THROWS_AS(VgCdfTable({0.4, 1.0, 0.0}, 1.0), std::domain_error);
}

TEST_CASE("convergence study: fine truncation passes, crude truncation fails") {
    RngHandle rng(42, 0);
    const VgParams p{1, 1, 0};
    ConvergenceStudy s = run_convergence_study(p, 2.0, {0.5, 0.02}, 20000, rng);
    CHECK(s.gamma_ladder.size() == 2);
    CHECK(s.rates[0] < s.rates[1]); // rate grows as the cutoff shrinks
    CHECK(s.ks_per_gamma[1] < s.ks_per_gamma[0]);
    CHECK(s.pass[1]);

    RngHandle rng2(42, 1);
    ConvergenceStudy crude = run_convergence_study(p, 2.0, {80.0}, 2000, rng2);
    // nearly all samples are exactly zero while the target cdf is 1/2 there
    CHECK(crude.ks_per_gamma[0] > 0.4);
    CHECK_FALSE(crude.pass[0]);

    RngHandle rng3(42, 2);
    CHECK_THROWS_AS(run_convergence_study(p, 2.0, {0.01, 0.1}, 100, rng3),
                    std::invalid_argument); // ladder must descend
    CHECK_THROWS_AS(run_convergence_study(p, 2.0, {}, 100, rng3),
                    std::invalid_argument);
}
