#pragma once

// Floating-point evaluation of the period integral
//
//   T(A) = 4A int_0^1 du / sqrt(e^{A^2 (1-u^2)} - 1)          (u route)
//        = 4 int_0^{pi/2} dtheta / sqrt(F(rho sin^2 theta)),  rho = A^2,
//
// with F(z) = (e^z - 1)/z, plus the first-order harmonic-balance frequency
// omega = 2/sqrt(4 - A^2), the small/large-A asymptotes, and dT/dA.
//
// The theta integrand is smooth, handled by adaptive Gauss-Kronrod panels.
// The u route keeps its 1/sqrt(1-u) endpoint singularity and integrates it
// with boost's tanh-sinh rule as an independent cross-check (substituting
// u = cos(theta) would collapse it into the theta route).

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <string>

#include "errors.hpp"
#include "quadrature.hpp"

namespace nlosc {

enum class period_method { quad_theta, quad_u, ode, series, hb, asymptotic };

inline const char* method_name(period_method m) {
    switch (m) {
        case period_method::quad_theta: return "quad-theta";
        case period_method::quad_u: return "quad-u";
        case period_method::ode: return "ode";
        case period_method::series: return "series";
        case period_method::hb: return "hb";
        default: return "asymptotic";
    }
}

struct period_result {
    double amplitude = 0.0;
    double rho = 0.0;  // amplitude^2
    double period = 0.0;
    double error_estimate = 0.0;  // absolute
    period_method method = period_method::quad_theta;
};

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2 * pi;

// F(z) = (e^z - 1)/z with a cancellation-safe expm1 and a series branch at
// tiny |z|; F > 0 for all real z, F(0) = 1.
inline double F_eval(double z) {
    if (std::fabs(z) < 1e-8) return 1.0 + z / 2 + z * z / 6;
    return std::expm1(z) / z;
}

// 1/sqrt(F(z)) in overflow-safe form.  For z > 1 use
// exp(-z/2) sqrt(z / (1 - e^{-z})), which stays finite long after e^z
// overflows (supports rho up to ~1.4e6, i.e. A ~ 1000).
inline double inv_sqrt_F(double z) {
    if (z > 1.0) return std::exp(-0.5 * z) * std::sqrt(z / -std::expm1(-z));
    return 1.0 / std::sqrt(F_eval(z));
}

// Primary route: smooth theta integrand on [0, pi/2].
inline period_result period_quad(double A, double tol = 1e-12) {
    if (!(A > 0)) throw out_of_domain("period_quad: amplitude must be positive");
    if (!(tol > 0)) throw out_of_domain("period_quad: tolerance must be positive");
    double rho = A * A;
    auto integrand = [rho](double th) {
        double s = std::sin(th);
        return inv_sqrt_F(rho * s * s);
    };
    quad_result q = adaptive_gauss_kronrod(integrand, 0.0, pi / 2, tol / 4);
    return {A, rho, 4 * q.value, 4 * q.error, period_method::quad_theta};
}

// Cross-check route: tanh-sinh on the u integral with its endpoint
// singularity.  The integrand takes (u, distance-to-nearest-endpoint) so the
// 1 - u^2 factor stays accurate all the way into the singular corner.
inline period_result period_integral_u(double A, double tol = 1e-12) {
    if (!(A > 0)) throw out_of_domain("period_integral_u: amplitude must be positive");
    double rho = A * A;
    auto integrand = [rho](double u, double xc) {
        // g = rho (1 - u^2); near u = 1 use 1 - u^2 = xc (2 - xc) exactly.
        double one_minus_u2 = (u < 0.5) ? 1.0 - u * u : xc * (2.0 - xc);
        double g = rho * one_minus_u2;
        if (g < 1e-8) {
            // e^g - 1 = g F(g): split off the sqrt(g) singular factor.
            return 1.0 / std::sqrt(g * F_eval(g));
        }
        if (g > 700.0) return std::exp(-0.5 * g) / std::sqrt(-std::expm1(-g));
        return 1.0 / std::sqrt(std::expm1(g));
    };
    boost::math::quadrature::tanh_sinh<double> quadrature;
    double err = 0.0, l1 = 0.0;
    double value = quadrature.integrate(integrand, 0.0, 1.0, tol / 64, &err, &l1);
    double abs_err = err * l1;  // boost reports a relative estimate
    if (!(abs_err < tol) && !(abs_err == 0))
        throw tolerance_not_reached("period_integral_u: tanh-sinh did not reach tolerance");
    return {A, rho, 4 * A * value, 4 * A * abs_err, period_method::quad_u};
}

// First-order harmonic balance: omega = 2/sqrt(4 - A^2).  Real only for
// A < 2 -- the approximation's breakdown is the point of reporting it.
inline double hb_frequency(double A) {
    if (!(A >= 0) || A >= 2)
        throw out_of_domain("hb_frequency: 2/sqrt(4 - A^2) is not defined for A >= 2");
    return 2.0 / std::sqrt(4.0 - A * A);
}

inline double hb_period(double A) { return two_pi / hb_frequency(A); }  // = pi sqrt(4 - A^2)

enum class asymptotic_regime { small, large };

// Leading asymptotes: T ~ 2pi (1 - A^2/8) for small A, T ~ 2pi/A for large A.
inline double asymptotic_period(double A, asymptotic_regime regime) {
    if (!(A > 0) && regime == asymptotic_regime::large)
        throw out_of_domain("asymptotic_period: large-A form requires A > 0");
    return regime == asymptotic_regime::small ? two_pi * (1.0 - A * A / 8) : two_pi / A;
}

// Central difference of period_quad at tolerance 1e-12.
inline double dT_dA(double A, double h = 0.0) {
    if (h == 0.0) h = 1e-4 * std::max(1.0, A);
    if (!(A > h))
        throw out_of_domain("dT_dA: need A > h for the central difference");
    return (period_quad(A + h).period - period_quad(A - h).period) / (2 * h);
}

}  // namespace nlosc
