#pragma once

// Test-only quadrature oracles, independent of the library code paths they
// check. The integrand receives its distances to both interval endpoints so
// algebraically singular factors like s^(-1/2) or (t-s)^(-alpha) can be
// evaluated without cancellation next to the endpoint.

#include <cmath>
#include <functional>
#include <limits>

namespace oracle {

/// Double-exponential (tanh-sinh) quadrature of f over (a, b) where
/// f(dist_a, dist_b) is written in terms of the distances to the endpoints.
/// Handles integrable endpoint singularities.
inline double tanh_sinh(const std::function<double(double, double)>& f, double a, double b,
                        double tol = 1e-12) {
    const double half = 0.5 * (b - a);
    const double pi_half = 1.5707963267948966;

    // 1 +- tanh(u) without cancellation.
    auto node_term = [&](double t) -> double {
        const double u = pi_half * std::sinh(t);
        const double cu = std::cosh(u);
        const double w = pi_half * std::cosh(t) / (cu * cu);
        const double da = half * 2.0 / (1.0 + std::exp(-2.0 * u));
        const double db = half * 2.0 / (1.0 + std::exp(2.0 * u));
        if (da <= 0.0 || db <= 0.0 || !(w > 0.0) || !std::isfinite(w)) {
            return 0.0;
        }
        return w * f(da, db);
    };

    double previous = std::numeric_limits<double>::quiet_NaN();
    double value = 0.0;
    for (int level = 0; level <= 12; ++level) {
        const double h = std::ldexp(1.0, -level);
        double sum = node_term(0.0);
        for (int k = 1;; ++k) {
            const double t = k * h;
            const double plus = node_term(t);
            const double minus = node_term(-t);
            sum += plus + minus;
            if (t > 4.0 && std::abs(plus) + std::abs(minus) <
                               tol * (std::abs(sum) + std::numeric_limits<double>::min())) {
                break;
            }
            if (t > 7.0) {
                break;
            }
        }
        value = half * h * sum;
        if (level > 2 && std::abs(value - previous) <= tol * std::max(1.0, std::abs(value))) {
            break;
        }
        previous = value;
    }
    return value;
}

/// Caputo derivative of order beta in (0,1) of a function with first
/// derivative `d1` (written as a function of the distance from zero):
///   (1/Gamma(1-beta)) * integral_0^t d1(s) (t-s)^(-beta) ds
inline double caputo_01(double beta, const std::function<double(double)>& d1, double t,
                        double tol = 1e-12) {
    const double integral = tanh_sinh(
        [&](double s, double dist_t) { return d1(s) * std::pow(dist_t, -beta); }, 0.0, t, tol);
    return integral / std::tgamma(1.0 - beta);
}

/// Caputo derivative of order beta in (1,2) given the second derivative,
/// which may itself be algebraically singular at zero; pass it as a function
/// of the distance from zero:
///   (1/Gamma(2-beta)) * integral_0^t d2(s) (t-s)^(1-beta) ds
inline double caputo_12(double beta, const std::function<double(double)>& d2, double t,
                        double tol = 1e-12) {
    const double integral = tanh_sinh(
        [&](double s, double dist_t) { return d2(s) * std::pow(dist_t, 1.0 - beta); }, 0.0, t,
        tol);
    return integral / std::tgamma(2.0 - beta);
}

/// Integral of s^(-alpha) over (lo, hi); the weight-oracle route.
inline double singular_cell_integral(double alpha, double lo, double hi, double tol = 1e-12) {
    return tanh_sinh([&](double from_lo, double) { return std::pow(lo + from_lo, -alpha); }, lo,
                     hi, tol);
}

}  // namespace oracle
