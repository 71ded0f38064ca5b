#pragma once

// Direct integration of x'' + (1 + x'^2) x = 0 as the first-order system
// (x, y) with y = x', using a Dormand-Prince 5(4) embedded pair (FSAL form)
// and adaptive step control.  Because the right-hand side is analytic, the
// node states themselves are a complete dense-output representation: x and y
// between nodes are recovered by two-point quintic Hermite interpolation
// with first and second derivatives computed from the ODE at the endpoints
// (local interpolation error O(h^6), below the integration error).
//
// Along the exact orbit ln(1 + y^2) + x^2 = A^2 (the zero-energy relation in
// overflow-free log form); its drift is the conservation diagnostic.

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"
#include "period.hpp"

namespace nlosc {

struct osc_state {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;  // x'
};

// dx/dt = y, dy/dt = -(1 + y^2) x.
inline void rhs(const osc_state& s, double& dx, double& dy) {
    dx = s.y;
    dy = -(1.0 + s.y * s.y) * s.x;
}

struct trajectory {
    std::vector<osc_state> states;  // strictly increasing t, first = (0, A, 0)
    double amplitude = 0.0;
};

namespace detail {

// Quintic Hermite on [0,1] from endpoint values and first/second derivatives
// (derivatives already scaled by h and h^2).
inline double hermite5(double s, double g0, double d0, double dd0, double g1, double d1,
                       double dd1) {
    double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
    double h0 = 1 - 10 * s3 + 15 * s4 - 6 * s5;
    double h1 = s - 6 * s3 + 8 * s4 - 3 * s5;
    double h2 = 0.5 * s2 - 1.5 * s3 + 1.5 * s4 - 0.5 * s5;
    double k0 = 10 * s3 - 15 * s4 + 6 * s5;
    double k1 = -4 * s3 + 7 * s4 - 3 * s5;
    double k2 = 0.5 * s3 - s4 + 0.5 * s5;
    return g0 * h0 + d0 * h1 + dd0 * h2 + g1 * k0 + d1 * k1 + dd1 * k2;
}

// First and second time derivatives of (x, y) at a state, from the ODE:
// x' = y, x'' = y' = -(1+y^2) x, y'' = -2 x y y' - (1+y^2) y.
inline void state_derivatives(const osc_state& s, double& dx, double& ddx, double& dy,
                              double& ddy) {
    dx = s.y;
    dy = -(1.0 + s.y * s.y) * s.x;
    ddx = dy;
    ddy = -2.0 * s.x * s.y * dy - (1.0 + s.y * s.y) * s.y;
}

}  // namespace detail

// Evaluate (x, y) at any time inside the trajectory's span.
inline osc_state dense_eval(const trajectory& traj, double t) {
    const auto& st = traj.states;
    if (st.empty() || t < st.front().t || t > st.back().t)
        throw out_of_domain("dense_eval: time outside trajectory span");
    auto it = std::upper_bound(st.begin(), st.end(), t,
                               [](double v, const osc_state& s) { return v < s.t; });
    std::size_t i = (it == st.begin()) ? 0 : static_cast<std::size_t>(it - st.begin()) - 1;
    if (i + 1 >= st.size()) i = st.size() - 2;
    const osc_state &a = st[i], &b = st[i + 1];
    double h = b.t - a.t, s = (t - a.t) / h;
    double dxa, ddxa, dya, ddya, dxb, ddxb, dyb, ddyb;
    detail::state_derivatives(a, dxa, ddxa, dya, ddya);
    detail::state_derivatives(b, dxb, ddxb, dyb, ddyb);
    osc_state out;
    out.t = t;
    out.x = detail::hermite5(s, a.x, h * dxa, h * h * ddxa, b.x, h * dxb, h * h * ddxb);
    out.y = detail::hermite5(s, a.y, h * dya, h * h * ddya, b.y, h * dyb, h * h * ddyb);
    return out;
}

// Dormand-Prince 5(4) with x(0) = A, y(0) = 0; tol is applied as combined
// relative and absolute local tolerance per step.
inline trajectory integrate(double A, double tol = 1e-11, double t_max = 26.0) {
    if (!(A > 0) || !(tol > 0) || !(t_max > 0))
        throw out_of_domain("integrate: require A > 0, tol > 0, t_max > 0");
    // Butcher tableau (Dormand & Prince 1980), FSAL.
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    auto f = [](double x, double y, double& dx, double& dy) {
        dx = y;
        dy = -(1.0 + y * y) * x;
    };

    trajectory traj;
    traj.amplitude = A;
    double t = 0.0, x = A, y = 0.0;
    traj.states.push_back({t, x, y});
    double k1x, k1y;
    f(x, y, k1x, k1y);
    double h = 1e-3;
    while (t < t_max) {
        h = std::min(h, t_max - t);
        if (h < 1e-14)
            throw step_size_underflow("integrate: step size fell below 1e-14 at t = " +
                                      std::to_string(t));
        double k2x, k2y, k3x, k3y, k4x, k4y, k5x, k5y, k6x, k6y, k7x, k7y;
        f(x + h * a21 * k1x, y + h * a21 * k1y, k2x, k2y);
        f(x + h * (a31 * k1x + a32 * k2x), y + h * (a31 * k1y + a32 * k2y), k3x, k3y);
        f(x + h * (a41 * k1x + a42 * k2x + a43 * k3x),
          y + h * (a41 * k1y + a42 * k2y + a43 * k3y), k4x, k4y);
        f(x + h * (a51 * k1x + a52 * k2x + a53 * k3x + a54 * k4x),
          y + h * (a51 * k1y + a52 * k2y + a53 * k3y + a54 * k4y), k5x, k5y);
        f(x + h * (a61 * k1x + a62 * k2x + a63 * k3x + a64 * k4x + a65 * k5x),
          y + h * (a61 * k1y + a62 * k2y + a63 * k3y + a64 * k4y + a65 * k5y), k6x, k6y);
        double xn = x + h * (b1 * k1x + b3 * k3x + b4 * k4x + b5 * k5x + b6 * k6x);
        double yn = y + h * (b1 * k1y + b3 * k3y + b4 * k4y + b5 * k5y + b6 * k6y);
        f(xn, yn, k7x, k7y);  // FSAL: becomes k1 on acceptance
        double errx = h * (e1 * k1x + e3 * k3x + e4 * k4x + e5 * k5x + e6 * k6x + e7 * k7x);
        double erry = h * (e1 * k1y + e3 * k3y + e4 * k4y + e5 * k5y + e6 * k6y + e7 * k7y);
        double scx = tol + tol * std::max(std::fabs(x), std::fabs(xn));
        double scy = tol + tol * std::max(std::fabs(y), std::fabs(yn));
        double ex = errx / scx, ey = erry / scy;
        double err = std::sqrt(0.5 * (ex * ex + ey * ey));
        if (err <= 1.0) {
            t += h;
            x = xn;
            y = yn;
            k1x = k7x;
            k1y = k7y;
            traj.states.push_back({t, x, y});
        }
        double factor = (err > 0) ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);
    }
    return traj;
}

// Events {y = 0 crossing downward, x > 0}: the returns to the positive
// turning point x = +A, transversal because y' = -(1+y^2) x = -A there.
// The initial state (0, A, 0) is itself such an event.
inline std::vector<double> detect_events(const trajectory& traj) {
    std::vector<double> events;
    const auto& st = traj.states;
    if (!st.empty() && st.front().y == 0.0 && st.front().x > 0) events.push_back(st.front().t);
    for (std::size_t i = 0; i + 1 < st.size(); ++i) {
        if (!(st[i].y > 0.0 && st[i + 1].y <= 0.0)) continue;
        double lo = st[i].t, hi = st[i + 1].t;
        // bisection on the dense interpolant to 1e-13 in t
        for (int it = 0; it < 64 && hi - lo > 1e-13; ++it) {
            double mid = 0.5 * (lo + hi);
            (dense_eval(traj, mid).y > 0.0 ? lo : hi) = mid;
        }
        double te = 0.5 * (lo + hi);
        if (dense_eval(traj, te).x > 0.0) events.push_back(te);
    }
    return events;
}

// Period = mean spacing of successive events; error = spread across them.
inline period_result detect_period(const trajectory& traj) {
    std::vector<double> ev = detect_events(traj);
    if (ev.size() < 2)
        throw insufficient_span("detect_period: need at least two x-maximum events");
    double mean = (ev.back() - ev.front()) / static_cast<double>(ev.size() - 1);
    double spread = 0.0;
    for (std::size_t i = 0; i + 1 < ev.size(); ++i)
        spread = std::max(spread, std::fabs(ev[i + 1] - ev[i] - mean));
    double A = traj.amplitude;
    return {A, A * A, mean, spread, period_method::ode};
}

// max_t |ln(1 + y^2) + x^2 - A^2| over the stored states.
inline double invariant_drift(const trajectory& traj) {
    double a2 = traj.amplitude * traj.amplitude, worst = 0.0;
    for (const auto& s : traj.states)
        worst = std::max(worst, std::fabs(std::log1p(s.y * s.y) + s.x * s.x - a2));
    return worst;
}

}  // namespace nlosc
