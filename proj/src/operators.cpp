#include "vg/operators.hpp"

#include <algorithm>
#include <cmath>

#include "vg/special_fn.hpp"

namespace vg {

namespace {

constexpr double kPi = 3.14159265358979323846;

quad::QuadConfig scaled(const quad::QuadConfig& q, double factor) {
    quad::QuadConfig c = q;
    c.abs_tol = std::max(q.abs_tol * factor, 1e-15);
    return c;
}

// int_0^inf w(s) a E1(b s) ds with the log-singular kernel split at s = 1/b:
// on (0, 1/b] substitute s = e^v, beyond truncate where a E1(bS) is negligible.
// kink, when finite, marks a derivative discontinuity of w.
double kernel_integral(const GammaParams& p, const std::function<double(double)>& w,
                       double kink, const quad::QuadConfig& q) {
    const double s0 = 1.0 / p.b;
    const double v_hi = std::log(s0);
    const double v_lo = v_hi - 40.0;
    auto near_integrand = [&](double v) {
        const double s = std::exp(v);
        return w(s) * p.a * special::exp_integral_e1(p.b * s) * s;
    };
    std::vector<double> near_splits;
    if (std::isfinite(kink) && kink > std::exp(v_lo) && kink < s0)
        near_splits.push_back(std::log(kink));
    double total = quad::integrate_split(near_integrand, v_lo, v_hi, near_splits,
                                         scaled(q, 0.5)).value;

    const double s_max = s0 + 56.0 / p.b;
    auto far_integrand = [&](double s) {
        return w(s) * p.a * special::exp_integral_e1(p.b * s);
    };
    std::vector<double> far_splits;
    if (std::isfinite(kink) && kink > s0 && kink < s_max) far_splits.push_back(kink);
    total += quad::integrate_split(far_integrand, s0, s_max, far_splits,
                                   scaled(q, 0.5)).value;
    return total;
}

// Heat semigroup G_y u(x) = (1/sqrt(pi)) int e^{-w^2} u(x - 2 sqrt(y) w) dw.
double heat_semigroup(const Func1D& u, double y, double x, const quad::QuadConfig& q) {
    const double half_width = 8.5; // e^{-8.5^2} ~ 5e-32
    const double scale = 2.0 * std::sqrt(y);
    auto integrand = [&](double w) {
        return std::exp(-w * w) * u.value(x - scale * w);
    };
    std::vector<double> splits;
    if (u.kink_at_origin) {
        const double w_star = x / scale;
        if (std::fabs(w_star) < half_width) splits.push_back(w_star);
    }
    quad::QuadConfig inner = q;
    inner.abs_tol = std::max(q.abs_tol * 1e-3, 5e-14);
    inner.rel_tol = std::min(q.rel_tol, 1e-10);
    return quad::integrate_split(integrand, -half_width, half_width, splits,
                                 inner).value / std::sqrt(kPi);
}

} // namespace

double Func1D::d(double x) const {
    if (deriv) return deriv(x);
    const double h = 1e-5 * std::max(1.0, std::fabs(x));
    return (value(x + h) - value(x - h)) / (2.0 * h);
}

double Func1D::d2(double x) const {
    if (second_deriv) return second_deriv(x);
    const double h = 1e-4 * std::max(1.0, std::fabs(x));
    return (value(x + h) - 2.0 * value(x) + value(x - h)) / (h * h);
}

double weyl_plus(const GammaParams& p, const Func1D& u, double x,
                 const quad::QuadConfig& q) {
    p.validate();
    q.validate();
    auto w = [&](double s) { return u.d(x - s); };
    const double kink = u.kink_at_origin ? x : std::nan("");
    return kernel_integral(p, w, kink, q);
}

double weyl_minus(const GammaParams& p, const Func1D& u, double x,
                  const quad::QuadConfig& q) {
    p.validate();
    q.validate();
    auto w = [&](double s) { return u.d(x + s); };
    const double kink = u.kink_at_origin ? -x : std::nan("");
    return -kernel_integral(p, w, kink, q);
}

double phillips_apply(const GammaParams& p, const Func1D& u, double x,
                      const quad::QuadConfig& q) {
    p.validate();
    q.validate();
    const double ux = u.value(x);
    const double y0 = 1e-8;
    // G_y u - u = y u'' + O(y^2) kills the 1/y singularity; the first slice
    // [0, y0] is taken from the Taylor term directly.
    double total = p.a * u.d2(x) * y0;

    auto small_y = [&](double r) {
        const double y = std::exp(r);
        return p.a * (heat_semigroup(u, y, x, q) - ux) * std::exp(-p.b * y);
    };
    total += quad::integrate(small_y, std::log(y0), 0.0, scaled(q, 0.5)).value;

    const double y_max = std::max(2.0, (56.0 + std::log1p(2.0 * p.a * u.decay_amp)) / p.b);
    auto large_y = [&](double y) {
        return p.a * (heat_semigroup(u, y, x, q) - ux) * std::exp(-p.b * y) / y;
    };
    total += quad::integrate(large_y, 1.0, y_max, scaled(q, 0.5)).value;
    return total;
}

std::complex<double> weyl_plus_symbol(const GammaParams& p, double xi) {
    p.validate();
    return p.a * std::log(std::complex<double>(1.0, -xi / p.b));
}

std::complex<double> weyl_minus_symbol(const GammaParams& p, double xi) {
    p.validate();
    return p.a * std::log(std::complex<double>(1.0, xi / p.b));
}

double phillips_symbol(const GammaParams& p, double xi) {
    p.validate();
    return -p.a * std::log1p(xi * xi / p.b);
}

} // namespace vg
