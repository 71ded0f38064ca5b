#pragma once

// Locating the complex singular points of T(rho) from series coefficients.
//
// Diagonal Pade scan: for N = 2..N_max build [N,N] of T/(2pi), filter
// Froissart doublets, and track the denominator zero pair nearest the
// origin.  For a branch point (the true singularity at rho = +-2pi*i is
// logarithmic) the pole sequence approaches the branch tip like ~C/N^2, so
// the scan also reports a `final` estimate: the two-point sequence limit
// fitted from the last two valid orders.  The per-order list keeps the raw
// values so the convergence behaviour itself stays inspectable.
//
// d-log scan: the same analysis on L = S'/S.  For an algebraic singularity
// S ~ (z - z0)^alpha, L has a simple pole at z0 with residue alpha, so the
// residue of the approximant at each located pole is reported as the
// exponent estimate.  (Sign convention: residue of (z - z0) L(z) at z0, so
// the fixture (1 - z/3)^{1/2} gives exponent +1/2.)
//
// Radius estimators: ratio |c_j/c_{j+1}|, two-step |c_j/c_{j+2}|^{1/2}
// (robust to the sign oscillation from a conjugate pair on the imaginary
// axis), and root |c_j|^{-1/j}.  The ratio sequence is generalized to
// successive *nonzero* coefficients, |c_j/c_k|^{1/(k-j)}, because a series
// in even powers alone (e.g. 1/(1 + z^2/R^2)) has no two consecutive
// nonzero terms.  Coefficient asymptotics c_j ~ K j^{-p} R^{-j} bias the
// two-step entries by a factor (1 + p/j); the `extrapolated` value removes
// the 1/j term by same-parity linear extrapolation before taking the median
// of the last five entries.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "oscillator_series.hpp"
#include "pade.hpp"
#include "period.hpp"
#include "poly_roots.hpp"
#include "power_series.hpp"
#include "rational.hpp"

namespace nlosc {

struct singularity_estimate {
    std::complex<double> location;      // canonical member of the conjugate pair (Im >= 0)
    std::optional<double> exponent;     // d-log scans only: Re(residue) at the pole
    std::pair<int, int> pade_order{0, 0};
    std::optional<double> residual;     // |location - previous valid order's location|
    bool conjugate_paired = false;      // a matching conjugate root was found (1e-10)
};

struct scan_result {
    std::vector<singularity_estimate> per_order;
    singularity_estimate final;      // sequence limit (1/N^2 fit of the last two orders)
    std::vector<int> skipped_orders; // exactly singular / degenerate Pade orders
};

using complex_pair = std::pair<std::complex<double>, std::complex<double>>;

namespace detail {

inline std::vector<double> to_double_vec(const std::vector<rational>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
    return out;
}

inline std::complex<double> poly_eval_c(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * z + c[j];
    return acc;
}

}  // namespace detail

// Generic scan over [N, N] approximants of an arbitrary rational-coefficient
// series.  `coeffs` must reach order 2*max_order.  Exactly singular orders
// are recorded and skipped.
inline scan_result scan_series(const std::vector<rational>& coeffs, int max_order,
                               bool dlog_exponents = false, int min_order = 2) {
    if (max_order < min_order || min_order < 1)
        throw out_of_domain("scan_series: require 1 <= min_order <= max_order");
    if (static_cast<int>(coeffs.size()) < 2 * max_order + 1)
        throw truncation_too_high("scan_series: series too short for the requested orders");

    scan_result result;
    std::optional<std::complex<double>> prev;
    int prev_order = 0;
    std::optional<std::complex<double>> prev2;  // for the final-limit fit
    int prev2_order = 0;

    for (int N = min_order; N <= max_order; ++N) {
        pade_approximant pa;
        try {
            pa = pade(coeffs, N, N);
        } catch (const singular_system&) {
            result.skipped_orders.push_back(N);
            continue;
        }
        std::vector<double> den = detail::to_double_vec(pa.den);
        std::vector<double> num = detail::to_double_vec(pa.num);
        std::vector<std::complex<double>> poles, zeros;
        try {
            poles = poly_roots(den);
            zeros = poly_roots(num);
        } catch (const no_convergence&) {
            result.skipped_orders.push_back(N);
            continue;
        }
        // Froissart doublets: a denominator zero shadowed by a numerator
        // zero within 1e-6 is a spurious pole-zero pair; drop it.
        std::vector<std::complex<double>> kept;
        for (const auto& p : poles) {
            bool doublet = false;
            for (const auto& z : zeros)
                if (std::abs(p - z) < 1e-6) {
                    doublet = true;
                    break;
                }
            if (!doublet) kept.push_back(p);
        }
        if (kept.empty()) {
            result.skipped_orders.push_back(N);
            continue;
        }
        std::complex<double> z = kept.front();  // poly_roots sorts by modulus
        bool paired = std::fabs(z.imag()) <= 1e-10;
        if (!paired)
            for (const auto& w : kept)
                if (std::abs(w - std::conj(z)) <= 1e-10) {
                    paired = true;
                    break;
                }
        if (z.imag() < 0) z = std::conj(z);

        singularity_estimate est;
        est.location = z;
        est.pade_order = {N, N};
        est.conjugate_paired = paired;
        if (prev) est.residual = std::abs(z - *prev);
        if (dlog_exponents) {
            // residue of num/den at the pole: num(z)/den'(z)
            std::vector<double> dden(den.size() > 1 ? den.size() - 1 : 0);
            for (std::size_t j = 1; j < den.size(); ++j)
                dden[j - 1] = static_cast<double>(j) * den[j];
            std::complex<double> dp = detail::poly_eval_c(dden, z);
            if (std::abs(dp) > 0)
                est.exponent = (detail::poly_eval_c(num, z) / dp).real();
        }
        result.per_order.push_back(est);
        prev2 = prev;
        prev2_order = prev_order;
        prev = z;
        prev_order = N;
    }

    if (result.per_order.empty())
        throw no_convergence("scan_series: every order was defective");

    // Final estimate: model z_N = z_inf + C/N^2 through the last two valid
    // orders and report z_inf; with a single valid order, report it as-is.
    result.final = result.per_order.back();
    if (prev2) {
        double p2 = static_cast<double>(prev2_order) * prev2_order;
        double n2 = static_cast<double>(prev_order) * prev_order;
        result.final.location = *prev - (*prev2 - *prev) * (p2 / (n2 - p2));
        if (result.final.location.imag() < 0)
            result.final.location = std::conj(result.final.location);
    }
    return result;
}

// Diagonal Pade scan of the T/(2pi) series in rho.
inline scan_result singularity_scan(int max_order) {
    series a = period_series(2 * max_order);
    return scan_series(a.coeffs, max_order);
}

// d-log series wrapper with the module's name (S'/S to order n-1).
inline series dlog_series(const series& s, int n) { return dlog(s, n); }

// d-log Pade scan: poles of [N,N] of L = (T/(2pi))'/(T/(2pi)) with residue
// exponents.  (T^-1 dT/dA = 2 sqrt(rho) L(rho); the Jacobian factor is
// analytic and nonzero away from 0, so pole locations are unchanged --
// the scan works in rho.)
inline scan_result dlog_singularity_scan(int max_order) {
    series a = period_series(2 * max_order + 1);
    series l = dlog_series(a, 2 * max_order + 1);
    return scan_series(l.coeffs, max_order, /*dlog_exponents=*/true);
}

// --- radius-of-convergence estimators ---

enum class radius_estimator { ratio, two_step, root };

inline const char* estimator_name(radius_estimator e) {
    switch (e) {
        case radius_estimator::ratio: return "ratio";
        case radius_estimator::two_step: return "two-step";
        default: return "root";
    }
}

struct radius_estimate {
    std::vector<std::pair<int, double>> per_order;  // (j, estimate), raw
    double extrapolated = 0.0;
    radius_estimator estimator = radius_estimator::two_step;
    std::vector<int> skipped;  // indices whose entry hit a zero coefficient
};

inline radius_estimate radius_estimate_from(const std::vector<rational>& coeffs,
                                            radius_estimator est) {
    if (coeffs.size() < 6)
        throw truncation_too_high("radius_estimate: need at least 6 coefficients");
    radius_estimate out;
    out.estimator = est;
    const int n = static_cast<int>(coeffs.size());

    if (est == radius_estimator::ratio) {
        // |c_j / c_k|^{1/(k-j)} over successive nonzero coefficients.
        int prev = -1;
        for (int j = 0; j < n; ++j) {
            if (coeffs[static_cast<std::size_t>(j)] == 0) {
                out.skipped.push_back(j);
                continue;
            }
            if (prev >= 0) {
                double r = std::fabs(to_double(coeffs[static_cast<std::size_t>(prev)] /
                                               coeffs[static_cast<std::size_t>(j)]));
                out.per_order.emplace_back(prev, std::pow(r, 1.0 / (j - prev)));
            }
            prev = j;
        }
    } else if (est == radius_estimator::two_step) {
        for (int j = 0; j + 2 < n; ++j) {
            if (coeffs[static_cast<std::size_t>(j)] == 0 ||
                coeffs[static_cast<std::size_t>(j + 2)] == 0) {
                out.skipped.push_back(j);
                continue;
            }
            double r = std::fabs(to_double(coeffs[static_cast<std::size_t>(j)] /
                                           coeffs[static_cast<std::size_t>(j + 2)]));
            out.per_order.emplace_back(j, std::sqrt(r));
        }
    } else {
        for (int j = 1; j < n; ++j) {
            if (coeffs[static_cast<std::size_t>(j)] == 0) {
                out.skipped.push_back(j);
                continue;
            }
            double m = std::fabs(to_double(coeffs[static_cast<std::size_t>(j)]));
            out.per_order.emplace_back(j, std::pow(m, -1.0 / j));
        }
    }
    if (out.per_order.empty())
        throw no_convergence("radius_estimate: no usable coefficient pairs");

    // Extrapolated value: median of the last five entries; for the two-step
    // estimator each entry is first corrected for its (1 + p/j) bias by
    // linear-in-1/j extrapolation against the same-parity predecessor:
    //   e_j (1 + p/j) -> e_j + (e_j - e_{j-2}) (j - 2)/2  has the 1/j term
    // cancelled exactly when e_j = R (1 + p/j).
    std::vector<double> vals;
    if (est == radius_estimator::two_step) {
        for (std::size_t i = 0; i < out.per_order.size(); ++i) {
            auto [j, e] = out.per_order[i];
            double corrected = e;
            for (std::size_t k = i; k-- > 0;) {
                if (out.per_order[k].first == j - 2) {
                    corrected = e + (e - out.per_order[k].second) * (j - 2) / 2.0;
                    break;
                }
                if (out.per_order[k].first < j - 2) break;
            }
            vals.push_back(corrected);
        }
    } else {
        for (const auto& [j, e] : out.per_order) vals.push_back(e);
    }
    std::size_t take = std::min<std::size_t>(5, vals.size());
    std::vector<double> tail(vals.end() - static_cast<long>(take), vals.end());
    std::sort(tail.begin(), tail.end());
    out.extrapolated = tail[tail.size() / 2];
    if (tail.size() % 2 == 0)
        out.extrapolated = 0.5 * (out.extrapolated + tail[tail.size() / 2 - 1]);
    return out;
}

// The analytic prediction: V(0) = (1 - e^rho)/(2 rho) vanishes first at
// rho = +-2 pi i, verified numerically before returning.
inline complex_pair critical_rho_prediction() {
    const std::complex<double> rc(0.0, two_pi);
    for (const auto& z : {rc, std::conj(rc)}) {
        std::complex<double> v0 = (1.0 - std::exp(z)) / (2.0 * z);
        if (std::abs(v0) >= 1e-12)
            throw no_convergence("critical_rho_prediction: V(0) verification failed");
    }
    return {rc, std::conj(rc)};
}

}  // namespace nlosc
