#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "vg/model.hpp"
#include "vg/rng.hpp"
#include "vg/sampling.hpp"

namespace vg {

// Default significance level for every KS gate.
inline constexpr double ks_default_alpha = 0.001;

struct KsReport {
    double statistic = 0.0;
    std::size_t n = 0;
    std::optional<std::size_t> m; // second sample size (two-sample only)
    double threshold = 0.0;
    bool pass = false;
};

// Kolmogorov asymptotic critical coefficient c(alpha) = sqrt(-ln(alpha/2)/2).
double ks_critical(double alpha);

KsReport ks_one_sample(std::vector<double> values,
                       const std::function<double(double)>& cdf,
                       double alpha = ks_default_alpha);

KsReport ks_two_sample(std::vector<double> a, std::vector<double> b,
                       double alpha = ks_default_alpha);

// (1/n) sum exp(i xi x_k).
std::complex<double> empirical_char(const std::vector<double>& values, double xi);

// CDF of the driftless VG law by adaptive integration of the closed form.
double vg_cdf(const VgParams& p, double t, double x, const quad::QuadConfig& q = {});

// Cached CDF on a Hermite-interpolated grid, for repeated evaluation inside
// KS statistics. Interpolation error is about 1e-6, well below KS resolution
// at the sample sizes used here.
class VgCdfTable {
public:
    VgCdfTable(const VgParams& p, double t, const quad::QuadConfig& q = {},
               std::size_t points = 4096);

    double operator()(double x) const;

private:
    std::vector<double> x_;    // nonnegative half-axis grid
    std::vector<double> cdf_;  // F on x_
    std::vector<double> pdf_;  // F' on x_
};

struct ConvergenceStudy {
    std::vector<double> gamma_ladder;
    std::vector<double> rates;        // t a E1(sqrt(b) gamma)
    std::vector<double> ks_per_gamma;
    std::vector<double> thresholds;
    std::vector<bool> pass;
    std::size_t n = 0;
    VgParams params;
    double t = 0.0;
};

// Compound-Poisson samples per ladder rung, each tested against the VG CDF
// at time t/2.
ConvergenceStudy run_convergence_study(const VgParams& p, double t,
                                       const std::vector<double>& gamma_ladder,
                                       std::size_t n, RngHandle& rng,
                                       const quad::QuadConfig& q = {});

} // namespace vg
