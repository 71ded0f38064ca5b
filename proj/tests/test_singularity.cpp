// Singularity scans and radius-of-convergence estimators: fixtures with
// known singularities, the oscillator series, and the analytic prediction.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include <nlosc/oscillator_series.hpp>
#include <nlosc/singularity.hpp>

using nlosc::rational;
using nlosc::two_pi;

namespace {

// Coefficients of 1/(1 + z^2/R^2): poles at +-iR, zero odd coefficients.
std::vector<rational> conjugate_pair_fixture(const rational& r2, int order) {
    std::vector<rational> c(static_cast<std::size_t>(order) + 1, rational(0));
    rational term(1);
    for (int j = 0; j <= order; j += 2) {
        c[static_cast<std::size_t>(j)] = term;
        term /= -r2;
    }
    return c;
}

// Coefficients of 1/(1 - z/7): all ratio entries must equal 7 exactly.
std::vector<rational> geometric_fixture(int order) {
    std::vector<rational> c(static_cast<std::size_t>(order) + 1);
    rational p(1);
    for (int j = 0; j <= order; ++j) {
        c[static_cast<std::size_t>(j)] = p;
        p /= 7;
    }
    return c;
}

}  // namespace

TEST_CASE("scan of a conjugate-pair fixture lands on +-iR") {
    std::vector<rational> c = conjugate_pair_fixture(rational(4), 20);  // R = 2
    nlosc::scan_result scan = nlosc::scan_series(c, 10);
    CHECK(std::abs(scan.final.location - std::complex<double>(0.0, 2.0)) < 1e-8);
    for (const auto& e : scan.per_order) {
        CHECK(e.conjugate_paired);
        CHECK(std::abs(std::abs(e.location.imag()) - 2.0) < 1e-6);
    }
}

TEST_CASE("oscillator scan: conjugate pair near 2 pi i with shrinking residuals") {
    nlosc::scan_result scan = nlosc::singularity_scan(10);
    REQUIRE(scan.per_order.size() >= 3);
    CHECK(std::fabs(scan.final.location.imag() - two_pi) < 0.1);
    CHECK(std::fabs(scan.final.location.real()) <=
          scan.per_order.back().residual.value_or(0.0));
    // residuals decrease over the last three orders; final residual < 0.05
    std::size_t n = scan.per_order.size();
    double r1 = scan.per_order[n - 3].residual.value_or(1e300);
    double r2 = scan.per_order[n - 2].residual.value_or(1e300);
    double r3 = scan.per_order[n - 1].residual.value_or(1e300);
    CHECK(r1 > r2);
    CHECK(r2 > r3);
    CHECK(r3 < 0.05);
    for (const auto& e : scan.per_order) CHECK(e.conjugate_paired);
}

TEST_CASE("d-log scan estimates location and exponent of an algebraic branch point") {
    // (1 + z^2/R^2)^(-1/2): d-log pole at +-iR with residue -> alpha = -1/2
    const double r = 2.0;
    std::vector<rational> base(25, rational(0));
    base[0] = 1;
    base[2] = rational(1, 4);
    nlosc::series h = nlosc::inv_sqrt_series({nlosc::series_var::generic, base}, 24);
    nlosc::series l = nlosc::dlog(h, 24);
    nlosc::scan_result scan = nlosc::scan_series(l.coeffs, 11, /*dlog_exponents=*/true);
    CHECK(std::abs(scan.final.location - std::complex<double>(0.0, r)) < 1e-6);
    REQUIRE(scan.final.exponent.has_value());
    CHECK(*scan.final.exponent == Catch::Approx(-0.5).margin(1e-4));
}

TEST_CASE("oscillator d-log scan at order 10 sits a few percent from 2 pi i") {
    nlosc::scan_result scan = nlosc::dlog_singularity_scan(10);
    double err = std::abs(scan.final.location - std::complex<double>(0.0, two_pi));
    // the period's singularity is logarithmic, not algebraic: the pole model
    // converges slowly, and at order 10 the estimate is still ~3e-2 away
    CHECK(err < 0.05);
    CHECK(std::fabs(scan.final.location.imag() - two_pi) < 0.05);
}

TEST_CASE("all three estimators converge on the fixture within 1% by order 30") {
    for (double r : {1.0, two_pi}) {
        rational r2(r * r);  // exact dyadic rational of the double R^2
        std::vector<rational> c = conjugate_pair_fixture(r2, 30);
        for (auto est : {nlosc::radius_estimator::ratio, nlosc::radius_estimator::two_step,
                         nlosc::radius_estimator::root}) {
            nlosc::radius_estimate re = nlosc::radius_estimate_from(c, est);
            CHECK(std::fabs(re.extrapolated - r) / r < 0.01);
        }
    }
}

TEST_CASE("geometric series: every ratio entry is exactly 7") {
    nlosc::radius_estimate re =
        nlosc::radius_estimate_from(geometric_fixture(12), nlosc::radius_estimator::ratio);
    REQUIRE(!re.per_order.empty());
    for (const auto& [j, v] : re.per_order) CHECK(v == 7.0);
    CHECK(re.skipped.empty());
    CHECK(re.extrapolated == 7.0);
}

TEST_CASE("zero coefficients are skipped and flagged by the ratio estimator") {
    std::vector<rational> c = conjugate_pair_fixture(rational(1), 16);
    nlosc::radius_estimate re =
        nlosc::radius_estimate_from(c, nlosc::radius_estimator::ratio);
    CHECK(!re.skipped.empty());
    CHECK(std::fabs(re.extrapolated - 1.0) < 0.01);
}

TEST_CASE("two-step estimator on the oscillator series: both views of 2 pi") {
    nlosc::radius_estimate rc = nlosc::radius_estimate_from(
        nlosc::csq_series(39).coeffs, nlosc::radius_estimator::two_step);
    CHECK(std::fabs(rc.extrapolated - two_pi) / two_pi < 0.02);
    nlosc::radius_estimate ra = nlosc::radius_estimate_from(
        nlosc::period_series(39).coeffs, nlosc::radius_estimator::two_step);
    CHECK(std::fabs(ra.extrapolated - two_pi) / two_pi < 0.02);
    CHECK(std::fabs(std::sqrt(ra.extrapolated) - std::sqrt(two_pi)) / std::sqrt(two_pi) <
          0.01);
}

TEST_CASE("insufficient coefficients are rejected") {
    std::vector<rational> c(5, rational(1));
    CHECK_THROWS_AS(nlosc::radius_estimate_from(c, nlosc::radius_estimator::ratio),
                    nlosc::truncation_too_high);
}

TEST_CASE("analytic critical-rho prediction") {
    nlosc::complex_pair p = nlosc::critical_rho_prediction();
    CHECK(std::abs(p.first - std::complex<double>(0.0, two_pi)) < 1e-15);
    CHECK(std::abs(p.second - std::complex<double>(0.0, -two_pi)) < 1e-15);
}

TEST_CASE("scan input validation") {
    std::vector<rational> tiny(4, rational(1));
    CHECK_THROWS_AS(nlosc::scan_series(tiny, 5), nlosc::truncation_too_high);
    CHECK_THROWS_AS(nlosc::singularity_scan(1), nlosc::out_of_domain);
}
