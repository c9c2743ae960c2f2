#include "vg/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vg/special_fn.hpp"

namespace vg {

namespace {

void require_finite(const std::vector<double>& values, const char* fn) {
    if (values.empty()) throw std::invalid_argument(std::string(fn) + ": empty sample");
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string(fn) + ": non-finite sample value");
}

} // namespace

double ks_critical(double alpha) {
    if (!(alpha > 0) || !(alpha < 1))
        throw std::invalid_argument("ks_critical: alpha must be in (0,1)");
    return std::sqrt(-0.5 * std::log(0.5 * alpha));
}

KsReport ks_one_sample(std::vector<double> values,
                       const std::function<double(double)>& cdf, double alpha) {
    require_finite(values, "ks_one_sample");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    double stat = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(values[i]);
        stat = std::max(stat, (i + 1.0) / n - f);
        stat = std::max(stat, f - static_cast<double>(i) / n);
    }
    KsReport r;
    r.statistic = stat;
    r.n = n;
    r.threshold = ks_critical(alpha) / std::sqrt(static_cast<double>(n));
    r.pass = stat <= r.threshold;
    return r;
}

KsReport ks_two_sample(std::vector<double> a, std::vector<double> b, double alpha) {
    require_finite(a, "ks_two_sample");
    require_finite(b, "ks_two_sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const std::size_t n = a.size(), m = b.size();
    std::size_t i = 0, j = 0;
    double stat = 0.0;
    while (i < n && j < m) {
        const double v = std::min(a[i], b[j]);
        while (i < n && a[i] <= v) ++i;
        while (j < m && b[j] <= v) ++j;
        stat = std::max(stat, std::fabs(static_cast<double>(i) / n -
                                        static_cast<double>(j) / m));
    }
    KsReport r;
    r.statistic = std::min(stat, 1.0);
    r.n = n;
    r.m = m;
    r.threshold = ks_critical(alpha) *
                  std::sqrt(static_cast<double>(n + m) / (static_cast<double>(n) * m));
    r.pass = r.statistic <= r.threshold;
    return r;
}

std::complex<double> empirical_char(const std::vector<double>& values, double xi) {
    require_finite(values, "empirical_char");
    std::complex<double> sum = 0.0;
    for (double v : values) sum += std::polar(1.0, xi * v);
    return sum / static_cast<double>(values.size());
}

double vg_cdf(const VgParams& p, double t, double x, const quad::QuadConfig& q) {
    p.validate();
    if (p.theta != 0.0)
        throw std::invalid_argument("vg_cdf: closed-form integration requires theta = 0");
    if (!(t > 0)) throw std::domain_error("vg_cdf: t must be positive");
    quad::QuadConfig cfg = q;
    cfg.abs_tol = std::min(q.abs_tol, 1e-8);
    const double ax = std::fabs(x);
    double half = 0.0;
    if (ax > 0) {
        auto pdf = [&](double s) { return vg_density(p, t, s).value; };
        half = quad::integrate(pdf, 0.0, ax, cfg).value;
    }
    const double f = x >= 0 ? 0.5 + half : 0.5 - half;
    return std::clamp(f, 0.0, 1.0);
}

VgCdfTable::VgCdfTable(const VgParams& p, double t, const quad::QuadConfig& q,
                       std::size_t points) {
    p.validate();
    if (p.theta != 0.0)
        throw std::invalid_argument("VgCdfTable: requires theta = 0");
    const double at = p.a * t;
    if (!(at > 0.5))
        throw std::domain_error("VgCdfTable: requires a*t > 1/2 (bounded density)");
    if (points < 16) throw std::invalid_argument("VgCdfTable: too few points");
    const double L = (45.0 + 5.0 * at) / std::sqrt(p.b);
    x_.resize(points);
    cdf_.resize(points);
    pdf_.resize(points);
    quad::QuadConfig cfg = q;
    cfg.abs_tol = 1e-12;
    cfg.rel_tol = 1e-10;
    auto pdf = [&](double s) { return vg_density(p, t, s).value; };
    double acc = 0.5;
    for (std::size_t i = 0; i < points; ++i) {
        x_[i] = L * static_cast<double>(i) / (points - 1);
        if (i > 0) acc += quad::integrate(pdf, x_[i - 1], x_[i], cfg).value;
        cdf_[i] = std::min(acc, 1.0);
        pdf_[i] = pdf(x_[i]);
    }
}

double VgCdfTable::operator()(double x) const {
    if (x < 0) return 1.0 - (*this)(-x);
    if (x >= x_.back()) return cdf_.back();
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
    const double h = x_[i + 1] - x_[i];
    const double s = (x - x_[i]) / h;
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * cdf_[i] + (s3 - 2 * s2 + s) * h * pdf_[i] +
           (-2 * s3 + 3 * s2) * cdf_[i + 1] + (s3 - s2) * h * pdf_[i + 1];
}

ConvergenceStudy run_convergence_study(const VgParams& p, double t,
                                       const std::vector<double>& gamma_ladder,
                                       std::size_t n, RngHandle& rng,
                                       const quad::QuadConfig& q) {
    p.validate();
    if (gamma_ladder.empty())
        throw std::invalid_argument("run_convergence_study: empty ladder");
    for (std::size_t i = 1; i < gamma_ladder.size(); ++i)
        if (!(gamma_ladder[i] < gamma_ladder[i - 1]))
            throw std::invalid_argument("run_convergence_study: ladder must descend");
    ConvergenceStudy study;
    study.gamma_ladder = gamma_ladder;
    study.n = n;
    study.params = p;
    study.t = t;
    const VgCdfTable table(p, 0.5 * t, q);
    const double sb = std::sqrt(p.b);
    for (double gamma : gamma_ladder) {
        const SamplerOutput s = sample_compound_poisson(p, t, gamma, n, rng);
        const KsReport ks = ks_one_sample(s.values, [&](double x) { return table(x); });
        study.rates.push_back(t * p.a * special::exp_integral_e1(sb * gamma));
        study.ks_per_gamma.push_back(ks.statistic);
        study.thresholds.push_back(ks.threshold);
        study.pass.push_back(ks.pass);
    }
    return study;
}

} // namespace vg
