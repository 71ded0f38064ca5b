#pragma once

// All complex roots of a polynomial with real or complex coefficients
// (ascending order, coeffs[j] multiplies z^j): companion-matrix eigenvalues
// followed by a few Newton polishing steps, verified against a residual
// bound and sorted by modulus.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "errors.hpp"

namespace nlosc {

namespace detail {

inline std::complex<double> poly_eval(const std::vector<std::complex<double>>& c,
                                      std::complex<double> z,
                                      std::complex<double>* dp = nullptr) {
    std::complex<double> p = 0.0, d = 0.0;
    for (std::size_t j = c.size(); j-- > 0;) {
        d = d * z + p;
        p = p * z + c[j];
    }
    if (dp) *dp = d;
    return p;
}

}  // namespace detail

inline std::vector<std::complex<double>> poly_roots(std::vector<std::complex<double>> c) {
    // Strip trailing (highest-order) zeros; a zero polynomial has no roots to report.
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    const std::size_t deg = c.size() - 1;

    double scale = 0.0;
    for (const auto& v : c) scale = std::max(scale, std::abs(v));

    // Leading roots at the origin (zero constant terms) come out exactly.
    std::vector<std::complex<double>> roots;
    std::size_t lead = 0;
    while (lead < deg && c[lead] == 0.0) {
        roots.emplace_back(0.0, 0.0);
        ++lead;
    }

    const std::size_t n = deg - lead;
    if (n > 0) {
        Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<long>(n), static_cast<long>(n));
        for (std::size_t i = 1; i < n; ++i) comp(static_cast<long>(i), static_cast<long>(i - 1)) = 1.0;
        for (std::size_t i = 0; i < n; ++i)
            comp(static_cast<long>(i), static_cast<long>(n - 1)) = -c[lead + i] / c.back();
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
        if (solver.info() != Eigen::Success)
            throw no_convergence("poly_roots: companion eigensolver did not converge");
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> r = solver.eigenvalues()(static_cast<long>(i));
            // Newton polish on the full polynomial.
            for (int it = 0; it < 4; ++it) {
                std::complex<double> d, p = detail::poly_eval(c, r, &d);
                if (std::abs(d) == 0.0) break;
                std::complex<double> step = p / d;
                if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
                r -= step;
            }
            roots.push_back(r);
        }
    }

    for (const auto& r : roots) {
        double bound = 1e-8 * scale * std::pow(std::max(1.0, std::abs(r)), static_cast<double>(deg));
        if (std::abs(detail::poly_eval(c, r)) > bound)
            throw no_convergence("poly_roots: root failed the residual check");
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma < mb;
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

inline std::vector<std::complex<double>> poly_roots(const std::vector<double>& c) {
    return poly_roots(std::vector<std::complex<double>>(c.begin(), c.end()));
}

}  // namespace nlosc
