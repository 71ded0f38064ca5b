#pragma once

// The concrete series of the oscillator x'' + (1 + x'^2) x = 0:
//
//   F(z)        = (e^z - 1)/z = sum_j z^j/(j+1)!
//   c-series    = 1/sqrt(F)  (the integrand expansion; c_0..c_3 = 1, -1/4, 1/96, 1/384)
//   period      = T(rho)/(2pi) with rho = A^2; a_j = 2 c_j I_j / pi, where
//                 I_j = int_0^{pi/2} sin^{2j} = (pi/2)(2j)!/(4^j j!^2) (Wallis)
//   tau-series  = (T - 2pi)/pi as a series in rho (all-rational: tau_j = 2 a_j)
//   inverted    = rho as a series in tau, by Lagrange reversion; the true
//                 coefficient of (T - 2pi)^k is q_k / pi^k.
//
// Factoring pi out of the stored coefficients keeps the whole chain exact.

#include <vector>

#include "power_series.hpp"
#include "rational.hpp"

namespace nlosc {

using series = exact_series<rational>;

// F(z) = (e^z - 1)/z: coefficient of z^j is 1/(j+1)!.
inline series taylor_F(int n) {
    std::vector<rational> c(static_cast<std::size_t>(n) + 1);
    rational fact(1);  // (j+1)! built incrementally
    for (int j = 0; j <= n; ++j) {
        fact *= j + 1;
        c[j] = rational(1) / fact;
    }
    return {series_var::z, std::move(c)};
}

// 1/sqrt(G) for a unit-constant series G (thin wrapper with the module's name).
inline series inv_sqrt_series(const series& g, int n) { return inv_sqrt(g, n); }

// c-series: 1/sqrt(F) to order n.
inline series csq_series(int n) { return inv_sqrt_series(taylor_F(n), n); }

// I_j = (pi/2) (2j)!/(4^j j!^2), via the Wallis recurrence I_j/I_{j-1} = (2j-1)/(2j).
inline pi_scaled_rational wallis_integral(int j) {
    rational r(1, 2);
    for (int k = 1; k <= j; ++k) r *= rational(2 * k - 1, 2 * k);
    return {r, 1};
}

// T(rho)/(2pi) = sum_j a_j rho^j with a_j = 2 c_j I_j / pi (the pi of I_j cancels).
inline series period_series(int n) {
    series c = csq_series(n);
    std::vector<rational> a(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) a[j] = 2 * c[j] * wallis_integral(j).value;
    return {series_var::rho, std::move(a)};
}

// tau(rho) = (T - 2pi)/pi = sum_{j>=1} 2 a_j rho^j.
inline series tau_series(int n) {
    series a = period_series(n);
    std::vector<rational> t(static_cast<std::size_t>(n) + 1, rational(0));
    for (int j = 1; j <= n; ++j) t[j] = 2 * a[j];
    return {series_var::rho, std::move(t)};
}

// Lagrange reversion wrapper with the module's name.
inline series revert_series(const series& s, int n) { return revert(s, n); }

// rho(tau) = sum_{k>=1} q_k tau^k; q_1..q_3 = -4, 1/2, -13/24.
inline series inverted_period_series(int n) { return revert_series(tau_series(n), n); }

}  // namespace nlosc
