#pragma once

// The cross-oracle verification suite: fifteen checks exercising every layer
// against independently derived expectations (exact rational values, high-
// precision quadrature references, mutual agreement between the three period
// routes, and the singularity/radius analyses).  Shared by the `verify` CLI
// command and the acceptance test binary.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "ode.hpp"
#include "oscillator_series.hpp"
#include "period.hpp"
#include "power_series.hpp"
#include "singularity.hpp"

namespace nlosc {

struct check_result {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace selftest_detail {

inline std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

}  // namespace selftest_detail

inline check_result check_series_exactness() {
    using selftest_detail::fmt;
    series c = inv_sqrt_series(taylor_F(3), 3);
    std::vector<rational> want = {rational(1), rational(-1, 4), rational(1, 96),
                                  rational(1, 384)};
    bool ok = c.coeffs == want;
    return {1, "series-exactness", ok,
            ok ? "c_0..c_3 = 1, -1/4, 1/96, 1/384 exactly"
               : "c-series mismatch: got " + to_string(c[0]) + ", " + to_string(c[1]) + ", " +
                     to_string(c[2]) + ", " + to_string(c[3])};
}

inline check_result check_period_series() {
    series a = period_series(2);
    std::vector<rational> want = {rational(1), rational(-1, 8), rational(1, 256)};
    bool ok = a.coeffs == want;
    return {2, "period-series", ok,
            ok ? "T/(2pi) = 1 - rho/8 + rho^2/256 exactly"
               : "got " + to_string(a[0]) + ", " + to_string(a[1]) + ", " + to_string(a[2])};
}

inline check_result check_inverted_series() {
    series q = inverted_period_series(3);
    std::vector<rational> want = {rational(0), rational(-4), rational(1, 2),
                                  rational(-13, 24)};
    bool ok = q.coeffs == want;
    return {3, "inverted-series", ok,
            ok ? "q_1..q_3 = -4, 1/2, -13/24 exactly (tau = dT/pi)"
               : "got " + to_string(q[0]) + ", " + to_string(q[1]) + ", " + to_string(q[2]) +
                     ", " + to_string(q[3])};
}

inline check_result check_triple_oracle() {
    using selftest_detail::fmt;
    double worst_u = 0.0, worst_ode = 0.0;
    for (double A : {0.1, 0.5, 1.0, 2.0, 3.0, 5.0}) {
        period_result q = period_quad(A);
        period_result u = period_integral_u(A);
        double t_est = q.period;
        trajectory traj = integrate(A, 1e-11, 4.3 * t_est);
        period_result o = detect_period(traj);
        worst_u = std::max(worst_u, std::fabs(q.period - u.period));
        worst_ode = std::max(worst_ode, std::fabs(q.period - o.period));
    }
    bool ok = worst_u < 1e-8 && worst_ode < 1e-8;
    return {4, "triple-oracle-agreement", ok,
            fmt("max |quad-u| = %.3e, max |quad-ode| = %.3e (tol 1e-8)", worst_u, worst_ode)};
}

inline check_result check_harmonic_limit() {
    using selftest_detail::fmt;
    double err0 = std::fabs(period_quad(1e-6).period - two_pi);
    bool ok = err0 < 1e-9;
    double worst_ratio = 0.0;
    for (double A : {0.05, 0.1, 0.2}) {
        double lhs = std::fabs(period_quad(A).period - two_pi * (1 - A * A / 8));
        double cap = 0.5 * A * A * A * A;
        worst_ratio = std::max(worst_ratio, lhs / cap);
        ok = ok && lhs < cap;
    }
    return {5, "harmonic-limit", ok,
            fmt("|T(1e-6) - 2pi| = %.3e (tol 1e-9); small-A remainder <= %.3f of 0.5 A^4",
                err0, worst_ratio)};
}

inline check_result check_large_amplitude() {
    using selftest_detail::fmt;
    double prev = -1.0, last = 0.0;
    bool decreasing = true;
    for (double A : {5.0, 10.0, 20.0}) {
        double e = std::fabs(A * period_quad(A).period / two_pi - 1.0);
        if (prev >= 0 && e >= prev) decreasing = false;
        prev = e;
        last = e;
    }
    bool ok = decreasing && last < 0.1;
    return {6, "large-amplitude-asymptote", ok,
            fmt("|A T/(2pi) - 1| decreasing: %s; at A=20: %.3e (tol 0.1)",
                decreasing ? "yes" : "no", last)};
}

inline check_result check_monotonicity() {
    using selftest_detail::fmt;
    double worst = -1e300;
    bool ok = true;
    for (int i = 1; i <= 50; ++i) {
        double A = i / 10.0;
        double d = dT_dA(A);
        worst = std::max(worst, d);
        if (!(d < 0)) ok = false;
    }
    return {7, "monotonicity", ok, fmt("max dT/dA over A = 0.1..5.0 is %.3e (< 0)", worst)};
}

inline check_result check_conservation() {
    using selftest_detail::fmt;
    double worst = 0.0;
    for (double A : {0.1, 1.0, 3.0, 5.0}) {
        double t_est = period_quad(A).period;
        trajectory traj = integrate(A, 1e-11, 3.3 * t_est);
        worst = std::max(worst, invariant_drift(traj));
    }
    bool ok = worst < 1e-9;
    return {8, "conservation", ok,
            fmt("max |ln(1+y^2)+x^2-A^2| over >=3 periods = %.3e (tol 1e-9)", worst)};
}

inline check_result check_pade_singularity() {
    using selftest_detail::fmt;
    scan_result scan = singularity_scan(10);
    double im_err = std::fabs(scan.final.location.imag() - two_pi);
    double re = std::fabs(scan.final.location.real());
    double resid = scan.per_order.back().residual.value_or(0.0);
    bool paired = true;
    for (const auto& e : scan.per_order) paired = paired && e.conjugate_paired;
    bool ok = im_err < 0.1 && re <= resid && paired;
    return {9, "pade-singularity", ok,
            fmt("final %.4f%+.4fi: |Im-2pi| = %.4f (tol 0.1), |Re| = %.4f <= residual %.4f, "
                "conjugate pairs: %s",
                scan.final.location.real(), scan.final.location.imag(), im_err, re, resid,
                paired ? "yes" : "no")};
}

inline check_result check_dlog_singularity() {
    using selftest_detail::fmt;
    scan_result scan = dlog_singularity_scan(10);
    std::complex<double> target(0.0, two_pi);
    double err = std::abs(scan.final.location - target);
    bool ok = err < 1e-2;
    return {10, "dlog-singularity", ok,
            fmt("final pole %.5f%+.5fi: |pole - 2pi i| = %.4e (tol 1e-2)",
                scan.final.location.real(), scan.final.location.imag(), err)};
}

inline check_result check_radius() {
    using selftest_detail::fmt;
    // exactly 40 coefficients each (orders 0..39)
    radius_estimate rc = radius_estimate_from(csq_series(39).coeffs, radius_estimator::two_step);
    radius_estimate ra = radius_estimate_from(period_series(39).coeffs, radius_estimator::two_step);
    double ec = std::fabs(rc.extrapolated - two_pi) / two_pi;
    double ea = std::fabs(ra.extrapolated - two_pi) / two_pi;
    double r_amp = std::sqrt(ra.extrapolated);
    double eamp = std::fabs(r_amp - std::sqrt(two_pi)) / std::sqrt(two_pi);
    bool ok = ec < 0.02 && ea < 0.02 && eamp < 0.01;
    return {11, "radius-of-convergence", ok,
            fmt("two-step: c-series %.6f (err %.3f%%), T-series %.6f (err %.3f%%), "
                "R_A %.6f (err %.3f%%)",
                rc.extrapolated, 100 * ec, ra.extrapolated, 100 * ea, r_amp, 100 * eamp)};
}

inline check_result check_divergence() {
    using selftest_detail::fmt;
    const double t_ref = 2.5295391517874875;  // T(sqrt(8)) from the 40-digit oracle
    series a = period_series(30);
    double d10 = std::fabs(two_pi * evaluate_partial_sum(a, 8.0, 10) - t_ref);
    double d30 = std::fabs(two_pi * evaluate_partial_sum(a, 8.0, 30) - t_ref);
    bool ok = d30 > 10 * d10;
    return {12, "divergence-beyond-radius", ok,
            fmt("|2pi S_N(8) - T(sqrt 8)|: N=10 -> %.4f, N=30 -> %.4f, ratio %.1f (> 10)",
                d10, d30, d30 / d10)};
}

inline check_result check_from_below() {
    using selftest_detail::fmt;
    series inv = inverted_period_series(6);
    double t_min = period_quad(3.0).period;
    bool monotone = true, below = true;
    double worst_gap = -1e300;
    for (int i = 0; i < 50; ++i) {
        double t = t_min + (two_pi - t_min) * i / 49.0;
        // invert T(A) = t by bisection (T is strictly decreasing in A)
        double lo = 1e-8, hi = 3.0 + 1e-6;
        for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
            double mid = 0.5 * (lo + hi);
            (period_quad(mid).period > t ? lo : hi) = mid;
        }
        double a_exact = 0.5 * (lo + hi);
        double rho_exact = a_exact * a_exact;
        double tau = (t - two_pi) / pi;
        double prev = -1e300;
        for (int N = 1; N <= 6; ++N) {
            double rho_n = evaluate_partial_sum(inv, tau, N);
            if (rho_n < prev - 1e-14) monotone = false;
            prev = rho_n;
            if (rho_n > rho_exact + 1e-10) below = false;
            worst_gap = std::max(worst_gap, rho_n - rho_exact);
        }
    }
    bool ok = monotone && below;
    return {13, "from-below-convergence", ok,
            fmt("orders 1..6 on 50-point grid: nondecreasing %s, rho_N <= rho_exact %s "
                "(max rho_N - rho_exact = %.3e)",
                monotone ? "yes" : "no", below ? "yes" : "no", worst_gap)};
}

inline check_result check_critical_rho() {
    using selftest_detail::fmt;
    complex_pair pred = critical_rho_prediction();
    bool exact = std::abs(pred.first - std::complex<double>(0.0, two_pi)) < 1e-15 &&
                 std::abs(pred.second - std::complex<double>(0.0, -two_pi)) < 1e-15;
    scan_result scan = dlog_singularity_scan(10);
    double dist = std::abs(scan.final.location - pred.first);
    bool ok = exact && dist < 1e-2;
    return {14, "critical-rho-consistency", ok,
            fmt("prediction +-2pi i %s; |prediction - dlog estimate| = %.4e (tol 1e-2)",
                exact ? "exact" : "WRONG", dist)};
}

inline check_result check_harmonic_balance() {
    using selftest_detail::fmt;
    bool domain_ok = true;
    for (double A : {2.0, 2.5}) {
        try {
            hb_frequency(A);
            domain_ok = false;
        } catch (const out_of_domain&) {
        }
    }
    try {
        hb_frequency(1.99);
    } catch (const out_of_domain&) {
        domain_ok = false;
    }
    double worst = 0.0;
    for (double A : {0.1, 0.3, 0.5}) {
        double t = period_quad(A).period;
        worst = std::max(worst, std::fabs(hb_period(A) - t) / t);
    }
    bool ok = domain_ok && worst < 0.01;
    return {15, "harmonic-balance-window", ok,
            fmt("domain error at A >= 2: %s; max relative HB error on {0.1,0.3,0.5} = %.3e "
                "(tol 0.01)",
                domain_ok ? "yes" : "no", worst)};
}

inline check_result run_check(int id) {
    switch (id) {
        case 1: return check_series_exactness();
        case 2: return check_period_series();
        case 3: return check_inverted_series();
        case 4: return check_triple_oracle();
        case 5: return check_harmonic_limit();
        case 6: return check_large_amplitude();
        case 7: return check_monotonicity();
        case 8: return check_conservation();
        case 9: return check_pade_singularity();
        case 10: return check_dlog_singularity();
        case 11: return check_radius();
        case 12: return check_divergence();
        case 13: return check_from_below();
        case 14: return check_critical_rho();
        case 15: return check_harmonic_balance();
        default: throw out_of_domain("run_check: id must be 1..15");
    }
}

inline std::vector<check_result> run_all_checks() {
    std::vector<check_result> results;
    for (int id = 1; id <= 15; ++id) results.push_back(run_check(id));
    return results;
}

}  // namespace nlosc
