#include "vg/special_fn.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace vg::special {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7};

double ln_gamma_lanczos(double x) {
    // valid for x >= 0.5
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
    const double t = x + kLanczosG - 0.5;
    return 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(t) - t + std::log(acc);
}

// zeta(2..kZetaMax), Euler-Maclaurin with N = 100, corrections through B8.
constexpr int kZetaMax = 40;

const std::array<double, kZetaMax + 1>& zeta_table() {
    static const std::array<double, kZetaMax + 1> table = [] {
        std::array<double, kZetaMax + 1> z{};
        const double N = 100.0;
        for (int k = 2; k <= kZetaMax; ++k) {
            double s = 0.0;
            for (int n = 99; n >= 1; --n) s += std::pow(n, -k);
            const double nk = std::pow(N, -k);
            double tail = N / (k - 1.0) + 0.5 + k / (12.0 * N);
            tail -= static_cast<double>(k) * (k + 1) * (k + 2) / (720.0 * N * N * N);
            tail += static_cast<double>(k) * (k + 1) * (k + 2) * (k + 3) * (k + 4) /
                    (30240.0 * std::pow(N, 5));
            tail -= static_cast<double>(k) * (k + 1) * (k + 2) * (k + 3) * (k + 4) *
                    (k + 5) * (k + 6) / (1209600.0 * std::pow(N, 7));
            z[k] = s + nk * tail;
        }
        return z;
    }();
    return table;
}

// Temme's auxiliary Gamma combinations for |mu| <= 1/2:
//   gampl = 1/Gamma(1+mu), gammi = 1/Gamma(1-mu),
//   gam1 = (gammi - gampl) / (2 mu)  (limit -euler_gamma at mu = 0),
//   gam2 = (gammi + gampl) / 2.
// Near mu = 0 the difference is formed from the log-series of 1/Gamma(1+mu)
// to avoid cancellation.
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl, double& gammi) {
    if (std::fabs(mu) > 0.25) {
        gampl = std::exp(-ln_gamma_lanczos(1.0 + mu));
        gammi = std::exp(-ln_gamma_lanczos(1.0 - mu));
        gam1 = (gammi - gampl) / (2.0 * mu);
        gam2 = 0.5 * (gammi + gampl);
        return;
    }
    // ln(1/Gamma(1+mu)) = euler_gamma*mu - sum_{k>=2} (-1)^k zeta(k) mu^k / k.
    // Split into odd part A_o = mu * r and even part A_e.
    const auto& zeta = zeta_table();
    double r = euler_gamma; // A_o / mu
    double a_even = 0.0;
    double mupow = mu;      // mu^{k-1} entering odd terms; mu^k for even terms
    for (int k = 2; k <= kZetaMax; ++k) {
        mupow *= mu; // mu^k
        const double term = zeta[k] * mupow / k;
        if (k % 2 == 0)
            a_even -= term;
        else
            r += zeta[k] * (mupow / mu) / k;
        if (std::fabs(term) < 1e-18) break;
    }
    const double a_odd = mu * r;
    const double e = std::exp(a_even);
    gampl = e * std::exp(a_odd);
    gammi = e * std::exp(-a_odd);
    gam2 = e * std::cosh(a_odd);
    double sinhc; // sinh(a_odd)/a_odd
    if (std::fabs(a_odd) < 1e-4)
        sinhc = 1.0 + a_odd * a_odd / 6.0;
    else
        sinhc = std::sinh(a_odd) / a_odd;
    gam1 = -e * r * sinhc;
}

// Temme's series for K_mu(x), K_{mu+1}(x), |mu| <= 1/2, 0 < x <= 2.
void bessel_k_temme(double mu, double x, int max_terms, double& kmu, double& kmu1) {
    const double eps = 1e-16;
    const double x2 = 0.5 * x;
    const double mu2 = mu * mu;
    const double pimu = kPi * mu;
    const double fact = (std::fabs(pimu) < eps) ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = (std::fabs(e) < eps) ? 1.0 : std::sinh(e) / e;
    double gam1, gam2, gampl, gammi;
    temme_gammas(mu, gam1, gam2, gampl, gammi);
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    int i = 1;
    for (; i <= max_terms; ++i) {
        ff = (i * ff + p + q) / (i * i - mu2);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        sum1 += c * (p - i * ff);
        if (std::fabs(del) < std::fabs(sum) * eps) break;
    }
    if (i > max_terms) throw std::runtime_error("bessel_k: series did not converge");
    kmu = sum;
    kmu1 = sum1 * 2.0 / x;
}

// Steed's continued fraction CF2 for K_mu(x), K_{mu+1}(x), |mu| <= 1/2, x > 2.
void bessel_k_cf2(double mu, double x, int max_terms, double& kmu, double& kmu1) {
    const double eps = 1e-16;
    const double mu2 = mu * mu;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double delh = d;
    double h = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1, c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= max_terms; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < eps) break;
    }
    if (i > max_terms) throw std::runtime_error("bessel_k: CF2 did not converge");
    h = a1 * h;
    kmu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    kmu1 = kmu * (mu + x + 0.5 - h) / x;
}

} // namespace

void Accuracy::validate() const {
    if (!(rel_tol > 0)) throw std::invalid_argument("Accuracy: rel_tol must be > 0");
    if (max_terms < 1) throw std::invalid_argument("Accuracy: max_terms must be >= 1");
}

double ln_gamma(double x) {
    if (!(x > 0)) throw std::domain_error("ln_gamma: argument must be positive");
    if (x < 0.5) return ln_gamma_lanczos(x + 1.0) - std::log(x);
    return ln_gamma_lanczos(x);
}

double gamma_fn(double x) {
    const double lg = ln_gamma(x);
    if (lg > 709.0) throw std::range_error("gamma_fn: overflow");
    return std::exp(lg);
}

double bessel_k(double nu, double x, const Accuracy& acc) {
    acc.validate();
    if (!(x > 0)) throw std::domain_error("bessel_k: x must be positive");
    nu = std::fabs(nu);
    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl; // in [-1/2, 1/2]
    const int max_terms = std::max(acc.max_terms, 500);
    double kmu, kmu1;
    if (x <= 2.0)
        bessel_k_temme(mu, x, max_terms, kmu, kmu1);
    else
        bessel_k_cf2(mu, x, max_terms, kmu, kmu1);
    const double xi2 = 2.0 / x;
    for (int i = 1; i <= nl; ++i) {
        const double knext = (mu + i) * xi2 * kmu1 + kmu;
        kmu = kmu1;
        kmu1 = knext;
        if (!std::isfinite(kmu1))
            throw std::range_error("bessel_k: overflow in upward recurrence");
    }
    if (!std::isfinite(kmu)) throw std::range_error("bessel_k: overflow");
    return kmu;
}

double exp_integral_e1(double x, const Accuracy& acc) {
    acc.validate();
    if (!(x > 0)) throw std::domain_error("exp_integral_e1: x must be positive");
    const int max_terms = std::max(acc.max_terms, 100);
    if (x <= 1.0) {
        // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
        double sum = 0.0;
        double term = 1.0;
        for (int k = 1; k <= max_terms; ++k) {
            term *= -x / k;
            const double add = -term / k;
            sum += add;
            if (std::fabs(add) < acc.rel_tol * std::fabs(sum)) break;
        }
        return -euler_gamma - std::log(x) + sum;
    }
    // Continued fraction with the modified Lentz method.
    const double fpmin = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= max_terms; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double del = c * d;
        h *= del;
        // the truncation error tracks |del - 1|, so stop well inside rel_tol
        if (std::fabs(del - 1.0) < 0.01 * acc.rel_tol) break;
    }
    return h * std::exp(-x);
}

} // namespace vg::special
