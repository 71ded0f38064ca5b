#pragma once

// Pade approximants [M, N] in exact rational arithmetic.  The denominator
// coefficients solve the N x N Toeplitz system
//
//   sum_{k=1..N} q_k c_{M+i-k} = -c_{M+i},   i = 1..N   (c_j = 0 for j < 0)
//
// by Gaussian elimination with first-nonzero pivoting; diagonal Pade systems
// of series with a nearby branch point are notoriously ill-conditioned in
// floating point, and exactness removes that error source entirely.  Only
// root-finding on the result is floating-point.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace nlosc {

struct pade_approximant {
    std::vector<rational> num;  // degree M (size M+1)
    std::vector<rational> den;  // degree N (size N+1), den[0] = 1
    int m = 0;
    int n = 0;
};

inline pade_approximant pade(const std::vector<rational>& c, int M, int N) {
    if (M < 0 || N < 0)
        throw out_of_domain("pade: degrees M and N must be nonnegative");
    if (static_cast<int>(c.size()) < M + N + 1)
        throw truncation_too_high("pade: need at least M+N+1 series coefficients");
    auto coeff = [&](int j) { return j >= 0 ? c[static_cast<std::size_t>(j)] : rational(0); };

    std::vector<rational> q(static_cast<std::size_t>(N) + 1, rational(0));
    q[0] = 1;
    if (N > 0) {
        // Dense augmented matrix [A | b], A[i][k-1] = c_{M+i-k}, b_i = -c_{M+i}.
        std::vector<std::vector<rational>> mat(static_cast<std::size_t>(N));
        for (int i = 1; i <= N; ++i) {
            auto& row = mat[static_cast<std::size_t>(i - 1)];
            row.resize(static_cast<std::size_t>(N) + 1);
            for (int k = 1; k <= N; ++k) row[static_cast<std::size_t>(k - 1)] = coeff(M + i - k);
            row[static_cast<std::size_t>(N)] = -coeff(M + i);
        }
        for (int col = 0; col < N; ++col) {
            int piv = -1;
            for (int r = col; r < N; ++r)
                if (mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0)
                throw singular_system("pade: Toeplitz system exactly singular at [" +
                                          std::to_string(M) + "," + std::to_string(N) + "]",
                                      M, N);
            std::swap(mat[static_cast<std::size_t>(col)], mat[static_cast<std::size_t>(piv)]);
            const rational p = mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int r = 0; r < N; ++r) {
                if (r == col) continue;
                const rational f =
                    mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / p;
                if (f == 0) continue;
                for (int cc = col; cc <= N; ++cc)
                    mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
                        f * mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(cc)];
            }
        }
        for (int k = 1; k <= N; ++k)
            q[static_cast<std::size_t>(k)] =
                mat[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(N)] /
                mat[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)];
    }

    // Numerator by convolution: p_j = sum_{k=0..min(j,N)} q_k c_{j-k}, j = 0..M.
    std::vector<rational> p(static_cast<std::size_t>(M) + 1, rational(0));
    for (int j = 0; j <= M; ++j)
        for (int k = 0; k <= std::min(j, N); ++k)
            p[static_cast<std::size_t>(j)] += q[static_cast<std::size_t>(k)] * coeff(j - k);

    return {std::move(p), std::move(q), M, N};
}

// Taylor coefficients of num/den through `order` (exact), for the
// accuracy-through-order check: t_j solves den * t = num.
inline std::vector<rational> pade_taylor(const pade_approximant& pa, int order) {
    std::vector<rational> t(static_cast<std::size_t>(order) + 1, rational(0));
    for (int j = 0; j <= order; ++j) {
        rational s = j <= pa.m ? pa.num[static_cast<std::size_t>(j)] : rational(0);
        for (int k = 1; k <= std::min(j, pa.n); ++k)
            s -= pa.den[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(j - k)];
        t[static_cast<std::size_t>(j)] = s;  // den[0] = 1
    }
    return t;
}

// Evaluate num/den at a complex point in double precision (Horner).
inline std::complex<double> pade_eval(const pade_approximant& pa, std::complex<double> z) {
    auto horner = [&](const std::vector<rational>& v) {
        std::complex<double> acc = 0.0;
        for (std::size_t j = v.size(); j-- > 0;) acc = acc * z + to_double(v[j]);
        return acc;
    };
    return horner(pa.num) / horner(pa.den);
}

}  // namespace nlosc
