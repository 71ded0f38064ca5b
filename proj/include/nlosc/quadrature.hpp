#pragma once

// Adaptive panel quadrature: 7-point Gauss / 15-point Kronrod pairs with
// recursive bisection.  |K15 - G7| is a conservative per-panel error bound
// for smooth integrands, so the returned error estimate is an overestimate.

#include <cmath>
#include <cstdint>

#include "errors.hpp"

namespace nlosc {

struct quad_result {
    double value = 0.0;
    double error = 0.0;   // accumulated |K15 - G7| over accepted panels
    long evaluations = 0;
};

namespace detail {

// QUADPACK dqk15 abscissae/weights (positive half; node 7 is the center).
inline constexpr double gk_x[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gk15(F&& f, double a, double b, double& k15, double& g7) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double fc = f(mid);
    k15 = gk_wk[7] * fc;
    g7 = gk_wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double d = half * gk_x[i];
        double s = f(mid - d) + f(mid + d);
        k15 += gk_wk[i] * s;
        if (i % 2 == 1) g7 += gk_wg[i / 2] * s;
    }
    k15 *= half;
    g7 *= half;
}

}  // namespace detail

// Integrate f over [a, b] to absolute tolerance tol.  Throws
// tolerance_not_reached once the evaluation budget is exhausted or a panel
// can no longer be split in double precision.
template <class F>
quad_result adaptive_gauss_kronrod(F&& f, double a, double b, double tol,
                                   long max_evaluations = 100000) {
    quad_result total;
    struct frame {
        double a, b, tol;
        int depth;
    };
    // Explicit stack; worst-case depth is bounded by the budget check.
    frame stack[2048];
    int top = 0;
    stack[top++] = {a, b, tol, 0};
    while (top > 0) {
        frame fr = stack[--top];
        if (total.evaluations + 15 > max_evaluations)
            throw tolerance_not_reached("adaptive quadrature: evaluation budget exhausted");
        double k15, g7;
        detail::gk15(f, fr.a, fr.b, k15, g7);
        total.evaluations += 15;
        double err = std::fabs(k15 - g7);
        double width = fr.b - fr.a;
        if (err <= fr.tol || fr.depth >= 52) {
            if (fr.depth >= 52 && err > fr.tol)
                throw tolerance_not_reached("adaptive quadrature: panel not splittable");
            total.value += k15;
            total.error += err;
            continue;
        }
        double mid = fr.a + 0.5 * width;
        stack[top++] = {fr.a, mid, 0.5 * fr.tol, fr.depth + 1};
        stack[top++] = {mid, fr.b, 0.5 * fr.tol, fr.depth + 1};
    }
    return total;
}

}  // namespace nlosc
