#include "vg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace vg::quad {

namespace {

// (7,15) Gauss-Kronrod nodes and weights on [-1, 1] (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double lo, hi;
    QuadResult r;
    bool operator<(const Segment& other) const { return r.error < other.r.error; }
};

QuadResult adaptive(const Integrand& f, double lo, double hi,
                    double abs_tol, double rel_tol, int max_subdivisions) {
    std::priority_queue<Segment> heap;
    Segment root{lo, hi, gauss_kronrod_15(f, lo, hi)};
    if (!std::isfinite(root.r.value))
        throw ConvergenceError("non-finite integrand on initial panel", root.r.error);
    heap.push(root);
    double total = root.r.value;
    double err = root.r.error;
    int panels = 1;
    while (err > std::max(abs_tol, rel_tol * std::fabs(total))) {
        if (panels >= max_subdivisions)
            throw ConvergenceError("quadrature did not converge", err);
        Segment worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi)
            throw ConvergenceError("quadrature interval exhausted", err);
        Segment left{worst.lo, mid, gauss_kronrod_15(f, worst.lo, mid)};
        Segment right{mid, worst.hi, gauss_kronrod_15(f, mid, worst.hi)};
        if (!std::isfinite(left.r.value) || !std::isfinite(right.r.value))
            throw ConvergenceError("non-finite integrand", err);
        total += left.r.value + right.r.value - worst.r.value;
        err += left.r.error + right.r.error - worst.r.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    return {total, err};
}

} // namespace

void QuadConfig::validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0) || !(tail_cut > 0) || tail_cut >= 1)
        throw std::invalid_argument("QuadConfig: tolerances must be positive, tail_cut in (0,1)");
    if (max_subdivisions < 10)
        throw std::invalid_argument("QuadConfig: max_subdivisions must be >= 10");
}

QuadResult gauss_kronrod_15(const Integrand& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(center - half * kXgk[i]);
        fv[14 - i] = f(center + half * kXgk[i]);
    }
    fv[7] = f(center);
    double kronrod = kWgk[7] * fv[7];
    double gauss = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kronrod += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    // QUADPACK-style error estimate: scale by the oscillation integral
    // resasc = int |f - mean|, not by the (possibly cancelling) integral itself.
    const double mean = 0.5 * kronrod; // average of f over the reference interval
    double resabs = kWgk[7] * std::fabs(fv[7]);
    double resasc = kWgk[7] * std::fabs(fv[7] - mean);
    for (int i = 0; i < 7; ++i) {
        resabs += kWgk[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
        resasc += kWgk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));
    }
    kronrod *= half;
    gauss *= half;
    resabs *= std::fabs(half);
    resasc *= std::fabs(half);
    const double diff = std::fabs(kronrod - gauss);
    double err = diff;
    if (resasc > 0.0 && diff > 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * diff / resasc, 1.5));
    err = std::max(err, 50.0 * 2.22e-16 * resabs);
    return {kronrod, err};
}

QuadResult integrate(const Integrand& f, double lo, double hi, const QuadConfig& cfg) {
    cfg.validate();
    if (lo == hi) return {0.0, 0.0};
    if (lo > hi) {
        QuadResult r = integrate(f, hi, lo, cfg);
        return {-r.value, r.error};
    }
    return adaptive(f, lo, hi, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);
}

QuadResult integrate_split(const Integrand& f, double lo, double hi,
                           std::vector<double> splits, const QuadConfig& cfg) {
    cfg.validate();
    splits.erase(std::remove_if(splits.begin(), splits.end(),
                                [&](double s) { return !(s > lo && s < hi); }),
                 splits.end());
    std::sort(splits.begin(), splits.end());
    splits.push_back(hi);
    const double n = static_cast<double>(splits.size());
    QuadResult out;
    double left = lo;
    for (double right : splits) {
        QuadResult piece = adaptive(f, left, right, cfg.abs_tol / n, cfg.rel_tol,
                                    cfg.max_subdivisions);
        out.value += piece.value;
        out.error += piece.error;
        left = right;
    }
    return out;
}

QuadResult integrate_to_inf(const Integrand& f, double lo, const QuadConfig& cfg) {
    cfg.validate();
    auto mapped = [&](double u) {
        const double om = 1.0 - u;
        const double x = lo + u / om;
        return f(x) / (om * om);
    };
    return adaptive(mapped, 0.0, 1.0, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);
}

} // namespace vg::quad
