// Direct integration: conservation, turning points, time-reversal symmetry,
// event detection, dense output, and error contracts.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <nlosc/ode.hpp>
#include <nlosc/period.hpp>

TEST_CASE("invariant drift stays within 100x the integration tolerance") {
    for (double tol : {1e-9, 1e-11}) {
        for (double a : {0.1, 1.0, 3.0, 5.0}) {
            double span = 3.3 * nlosc::period_quad(a).period;
            nlosc::trajectory traj = nlosc::integrate(a, tol, span);
            CHECK(nlosc::invariant_drift(traj) < 100 * tol);
        }
    }
}

TEST_CASE("drift bounds: A=1 over t_max=20 and A=5 over t_max=5") {
    nlosc::trajectory t1 = nlosc::integrate(1.0, 1e-11, 20.0);
    CHECK(nlosc::invariant_drift(t1) < 1e-10);
    nlosc::trajectory t5 = nlosc::integrate(5.0, 1e-11, 5.0);
    CHECK(nlosc::invariant_drift(t5) < 1e-9);
}

TEST_CASE("turning points: |x| bounded by A and attained at events") {
    for (double a : {0.5, 1.0, 3.0}) {
        double span = 4.3 * nlosc::period_quad(a).period;
        nlosc::trajectory traj = nlosc::integrate(a, 1e-11, span);
        for (const auto& s : traj.states) CHECK(std::fabs(s.x) <= a * (1 + 1e-9));
        for (double te : nlosc::detect_events(traj))
            CHECK(std::fabs(nlosc::dense_eval(traj, te).x - a) < 1e-8);
    }
}

TEST_CASE("time-reversal symmetry about the initial turning point") {
    double t_ref = nlosc::period_quad(1.0).period;
    nlosc::trajectory traj = nlosc::integrate(1.0, 1e-11, 1.05 * t_ref);
    for (int i = 1; i < 10; ++i) {
        double t = t_ref * i / 20.0;
        double xf = nlosc::dense_eval(traj, t).x;
        double xb = nlosc::dense_eval(traj, t_ref - t).x;
        CHECK(std::fabs(xf - xb) < 1e-7);
    }
}

TEST_CASE("detected period matches quadrature across amplitudes") {
    for (double a : {0.1, 0.5, 1.0, 2.0, 3.0, 5.0}) {
        double t_ref = nlosc::period_quad(a).period;
        nlosc::trajectory traj = nlosc::integrate(a, 1e-11, 4.3 * t_ref);
        nlosc::period_result p = nlosc::detect_period(traj);
        CHECK(std::fabs(p.period - t_ref) < 1e-8);
        CHECK(p.method == nlosc::period_method::ode);
        CHECK(p.amplitude == a);
    }
}

TEST_CASE("events sit at integer multiples of the period") {
    double t_ref = nlosc::period_quad(2.0).period;
    nlosc::trajectory traj = nlosc::integrate(2.0, 1e-11, 4.3 * t_ref);
    std::vector<double> ev = nlosc::detect_events(traj);
    REQUIRE(ev.size() >= 4);
    CHECK(ev[0] == Catch::Approx(0.0).margin(1e-10));
    for (std::size_t k = 1; k < ev.size(); ++k)
        CHECK(ev[k] == Catch::Approx(k * t_ref).margin(1e-8 * static_cast<double>(k)));
}

TEST_CASE("dense output interpolates between accepted steps") {
    nlosc::trajectory traj = nlosc::integrate(1.0, 1e-11, 6.0);
    // compare interpolant against a fresh integration stopped at mid-span times
    for (double t : {0.7, 1.9, 3.14, 5.5}) {
        nlosc::osc_state s = nlosc::dense_eval(traj, t);
        nlosc::trajectory direct = nlosc::integrate(1.0, 1e-12, t);
        const nlosc::osc_state& e = direct.states.back();
        CHECK(s.x == Catch::Approx(e.x).margin(1e-9));
        CHECK(s.y == Catch::Approx(e.y).margin(1e-9));
    }
    CHECK_THROWS_AS(nlosc::dense_eval(traj, 6.5), nlosc::out_of_domain);
    CHECK_THROWS_AS(nlosc::dense_eval(traj, -0.1), nlosc::out_of_domain);
}

TEST_CASE("insufficient span is reported") {
    // A=1 has period ~5.53; half a period contains a single event (t=0)
    nlosc::trajectory traj = nlosc::integrate(1.0, 1e-9, 2.0);
    CHECK_THROWS_AS(nlosc::detect_period(traj), nlosc::insufficient_span);
}

TEST_CASE("integration argument contracts") {
    CHECK_THROWS_AS(nlosc::integrate(-1.0, 1e-9, 10.0), nlosc::out_of_domain);
    CHECK_THROWS_AS(nlosc::integrate(1.0, 0.0, 10.0), nlosc::out_of_domain);
    CHECK_THROWS_AS(nlosc::integrate(1.0, 1e-9, -2.0), nlosc::out_of_domain);
}

TEST_CASE("trajectory endpoints and initial conditions") {
    nlosc::trajectory traj = nlosc::integrate(2.5, 1e-10, 7.0);
    REQUIRE(!traj.states.empty());
    CHECK(traj.states.front().t == 0.0);
    CHECK(traj.states.front().x == 2.5);
    CHECK(traj.states.front().y == 0.0);
    CHECK(traj.states.back().t == Catch::Approx(7.0).margin(1e-12));
    CHECK(traj.amplitude == 2.5);
}
