#pragma once

// Truncated power series over an exact coefficient ring.  Everything here is
// pure, allocation-local, and exact when R is nlosc::rational; the only
// floating-point step in the whole series layer is evaluate_partial_sum.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace nlosc {

// The three variables that appear in the analysis: z (argument of F and of
// the c-series), rho = A^2 (argument of the period series), and
// tau = (T - 2pi)/pi (argument of the inverted series).
enum class series_var { z, rho, tau, generic };

inline const char* var_name(series_var v) {
    switch (v) {
        case series_var::z: return "z";
        case series_var::rho: return "rho";
        case series_var::tau: return "tau";
        default: return "x";
    }
}

template <class R>
struct exact_series {
    series_var var = series_var::generic;
    std::vector<R> coeffs;  // coeffs[j] multiplies var^j; size() == order()+1

    exact_series() = default;
    exact_series(series_var v, std::vector<R> c) : var(v), coeffs(std::move(c)) {}

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const R& operator[](std::size_t j) const { return coeffs[j]; }
    R& operator[](std::size_t j) { return coeffs[j]; }

    friend bool operator==(const exact_series& a, const exact_series& b) {
        return a.var == b.var && a.coeffs == b.coeffs;
    }
};

namespace detail {

template <class R>
void require_same_variable(const exact_series<R>& a, const exact_series<R>& b,
                           const char* op) {
    if (a.var != b.var)
        throw variable_mismatch(std::string(op) + ": series in '" + var_name(a.var) +
                                "' and '" + var_name(b.var) + "' cannot be combined");
}

// Raw Cauchy product of coefficient vectors, truncated at `order`.
template <class R>
std::vector<R> convolve(const std::vector<R>& a, const std::vector<R>& b, int order) {
    std::vector<R> c(static_cast<std::size_t>(order) + 1, R(0));
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= order; ++i) {
        if (a[i] == 0) continue;
        std::size_t jmax = std::min(b.size(), static_cast<std::size_t>(order) + 1 - i);
        for (std::size_t j = 0; j < jmax; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

}  // namespace detail

// Cauchy product truncated at min(order_a, order_b).
template <class R>
exact_series<R> multiply(const exact_series<R>& a, const exact_series<R>& b) {
    detail::require_same_variable(a, b, "multiply");
    int order = std::min(a.order(), b.order());
    return {a.var, detail::convolve(a.coeffs, b.coeffs, order)};
}

// H with H^2 G = 1 + O(x^{n+1}), solved term by term.  Writing out the
// coefficient of x^k in H*H*G, the unknown H[k] appears only in the term
// 2 H[0] H[k] G[0] = 2 H[k], so each order is a linear solve.
template <class R>
exact_series<R> inv_sqrt(const exact_series<R>& g, int n) {
    if (g.order() < 0 || g[0] != R(1))
        throw non_unit_constant_term("inv_sqrt: constant term of the input must be 1");
    if (n > g.order())
        throw truncation_too_high("inv_sqrt: requested order exceeds input order");
    std::vector<R> h(static_cast<std::size_t>(n) + 1, R(0));
    h[0] = R(1);
    for (int k = 1; k <= n; ++k) {
        R s(0);
        for (int i = 0; i <= k; ++i) {
            if (i == k) continue;
            for (int j = 0; j <= k - i; ++j) {
                if (j == k) continue;
                int m = k - i - j;
                if (m <= g.order() && g[m] != R(0)) s += h[i] * h[j] * g.coeffs[m];
            }
        }
        h[k] = -s / 2;
    }
    return {g.var, std::move(h)};
}

// Term-by-term derivative (order drops by one).
template <class R>
exact_series<R> derivative(const exact_series<R>& s) {
    std::vector<R> d;
    for (int j = 1; j <= s.order(); ++j) d.push_back(R(j) * s.coeffs[j]);
    return {s.var, std::move(d)};
}

// Logarithmic derivative L = S'/S to order n-1, from the recurrence S' = L*S:
// (k+1) S[k+1] = sum_{i=0..k} L[i] S[k-i], solved for L[k] in order.
template <class R>
exact_series<R> dlog(const exact_series<R>& s, int n) {
    if (s.order() < 0 || s[0] == R(0))
        throw zero_constant_term("dlog: constant term of the input must be nonzero");
    if (n > s.order())
        throw truncation_too_high("dlog: requested order exceeds input order");
    std::vector<R> l(static_cast<std::size_t>(std::max(n, 1)), R(0));
    for (int k = 0; k + 1 <= n; ++k) {
        R s_next = R(k + 1) * s.coeffs[k + 1];
        for (int i = 0; i < k; ++i)
            if (l[i] != R(0) && s.coeffs[k - i] != R(0)) s_next -= l[i] * s.coeffs[k - i];
        l[k] = s_next / s[0];
    }
    l.resize(static_cast<std::size_t>(std::max(n, 1)));
    return {s.var, std::move(l)};
}

// Composition a(b(x)) truncated at `order`; requires b[0] = 0 so that the
// truncation is exact (Horner scheme on series).
template <class R>
exact_series<R> compose(const exact_series<R>& a, const exact_series<R>& b, int order) {
    if (b.order() < 0 || b[0] != R(0))
        throw nonzero_constant("compose: inner series must have zero constant term");
    std::vector<R> acc(1, R(0));
    for (int j = a.order(); j >= 0; --j) {
        acc = detail::convolve(acc, b.coeffs, order);
        if (acc.empty()) acc.resize(1, R(0));
        acc[0] += a.coeffs[j];
        acc.resize(static_cast<std::size_t>(order) + 1, R(0));
    }
    return {b.var, std::move(acc)};
}

// Lagrange reversion: R with R(S(x)) = x + O(x^{n+1}).  Fixed-point
// iteration x <- (t - sum_{j>=2} S[j] x^j)/S[1]; each sweep fixes one more
// coefficient, so n sweeps suffice (we iterate to stationarity for clarity).
// The reverted series lives in the "value" variable of S, so rho <-> tau.
template <class R>
exact_series<R> revert(const exact_series<R>& s, int n) {
    if (s.order() >= 0 && s[0] != R(0))
        throw nonzero_constant("revert: series must have zero constant term");
    if (s.order() < 1 || s[1] == R(0))
        throw zero_linear_term("revert: series must have a nonzero linear term");
    series_var out_var = s.var == series_var::rho   ? series_var::tau
                         : s.var == series_var::tau ? series_var::rho
                                                    : s.var;
    std::vector<R> x(static_cast<std::size_t>(n) + 1, R(0));
    if (n >= 1) x[1] = R(1) / s[1];
    for (int sweep = 0; sweep < n; ++sweep) {
        // tail = sum_{j>=2} S[j] * x^j, truncated at n
        std::vector<R> tail(static_cast<std::size_t>(n) + 1, R(0));
        std::vector<R> xpow = detail::convolve(x, x, n);  // x^2
        for (int j = 2; j <= std::min(s.order(), n); ++j) {
            if (s.coeffs[j] != R(0))
                for (int k = 0; k <= n; ++k) tail[k] += s.coeffs[j] * xpow[k];
            if (j < std::min(s.order(), n)) xpow = detail::convolve(xpow, x, n);
        }
        std::vector<R> next(static_cast<std::size_t>(n) + 1, R(0));
        for (int k = 0; k <= n; ++k) {
            R t = (k == 1) ? R(1) : R(0);
            next[k] = (t - tail[k]) / s[1];
        }
        next[0] = R(0);
        if (next == x) break;
        x = std::move(next);
    }
    return {out_var, std::move(x)};
}

// Horner evaluation of the partial sum through x^N in double precision.
template <class R>
double evaluate_partial_sum(const exact_series<R>& s, double x, int N) {
    if (N < 0 || N > s.order())
        throw truncation_too_high("evaluate_partial_sum: truncation order " +
                                  std::to_string(N) + " not in [0, " +
                                  std::to_string(s.order()) + "]");
    double acc = 0.0;
    for (int j = N; j >= 0; --j) acc = acc * x + to_double(s.coeffs[j]);
    return acc;
}

}  // namespace nlosc
