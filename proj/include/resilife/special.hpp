#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace resilife {

// Log of the binomial coefficient C(n, k), exact enough for n up to ~10^3.
inline double log_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::domain_error("log_binomial: k out of range");
    if (k == 0 || k == n) return 0.0;
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

namespace detail {

// Series expansion for the lower regularized incomplete gamma P(a, x), x < a + 1.
inline double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_p_series: no convergence");
}

// Lentz continued fraction for the scaled upper gamma; returns CF such that
// Gamma(a, x) = exp(-x + a*log(x)) * CF, valid for x >= a + 1.
inline double upper_gamma_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) return h;
    }
    throw std::runtime_error("upper_gamma_cf: no convergence");
}

} // namespace detail

// Lower regularized incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
inline double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::domain_error("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return detail::gamma_p_series(a, x);
    double cf = detail::upper_gamma_cf(a, x);
    double q = std::exp(-x + a * std::log(x) - std::lgamma(a)) * cf;
    return 1.0 - q;
}

// Upper regularized incomplete gamma Q(a, x) = 1 - P(a, x).
inline double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::domain_error("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
    double cf = detail::upper_gamma_cf(a, x);
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * cf;
}

// ln Gamma(a, x) for the unnormalized upper gamma integral; stays finite where
// Gamma(a, x) itself underflows (x of order 10^3 and beyond).
inline double log_upper_gamma(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::domain_error("log_upper_gamma: bad arguments");
    if (x == 0.0) return std::lgamma(a);
    if (x < a + 1.0) {
        double q = 1.0 - detail::gamma_p_series(a, x);
        if (q <= 0.0) return -std::numeric_limits<double>::infinity();
        return std::log(q) + std::lgamma(a);
    }
    return -x + a * std::log(x) + std::log(detail::upper_gamma_cf(a, x));
}

// Quantile of the chi-squared distribution with df degrees of freedom,
// by bisection on the regularized gamma cdf.
inline double chi_squared_quantile(double p, int df) {
    if (p <= 0.0 || p >= 1.0 || df < 1) throw std::domain_error("chi_squared_quantile: bad arguments");
    const double a = 0.5 * df;
    double lo = 0.0, hi = 1.0;
    while (gamma_p(a, 0.5 * hi) < p) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (gamma_p(a, 0.5 * mid) < p) lo = mid; else hi = mid;
        if (hi - lo < 1e-10 * (1.0 + hi)) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace resilife
