// Exact-rational Pade construction and complex polynomial root finding.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include <nlosc/oscillator_series.hpp>
#include <nlosc/pade.hpp>
#include <nlosc/poly_roots.hpp>

using nlosc::rational;

namespace {
std::vector<rational> exp_series(int n) {
    std::vector<rational> c(static_cast<std::size_t>(n) + 1);
    rational fact(1);
    c[0] = 1;
    for (int j = 1; j <= n; ++j) {
        fact *= j;
        c[static_cast<std::size_t>(j)] = rational(1) / fact;
    }
    return c;
}
}  // namespace

TEST_CASE("the [2,2] approximant of exp is the classic rational") {
    nlosc::pade_approximant p = nlosc::pade(exp_series(4), 2, 2);
    REQUIRE(p.num.size() == 3);
    REQUIRE(p.den.size() == 3);
    CHECK(p.num[0] == rational(1));
    CHECK(p.num[1] == rational(1, 2));
    CHECK(p.num[2] == rational(1, 12));
    CHECK(p.den[0] == rational(1));
    CHECK(p.den[1] == rational(-1, 2));
    CHECK(p.den[2] == rational(1, 12));
}

TEST_CASE("accuracy through order M+N, exactly") {
    for (auto [m, n] : {std::pair{3, 2}, {2, 3}, {4, 4}}) {
        std::vector<rational> c = exp_series(m + n);
        nlosc::pade_approximant p = nlosc::pade(c, m, n);
        std::vector<rational> back = nlosc::pade_taylor(p, m + n);
        for (int j = 0; j <= m + n; ++j)
            CHECK(back[static_cast<std::size_t>(j)] == c[static_cast<std::size_t>(j)]);
    }
    // and on the oscillator series itself
    nlosc::series a = nlosc::period_series(10);
    nlosc::pade_approximant p = nlosc::pade(a.coeffs, 5, 5);
    std::vector<rational> back = nlosc::pade_taylor(p, 10);
    for (int j = 0; j <= 10; ++j)
        CHECK(back[static_cast<std::size_t>(j)] == a[j]);
}

TEST_CASE("rational functions are recovered exactly") {
    // f = (1 + 2z) / (1 - z + z^2/2): generate its series, then demand P and Q back
    std::vector<rational> pnum = {rational(1), rational(2)};
    std::vector<rational> qden = {rational(1), rational(-1), rational(1, 2)};
    const int order = 7;
    std::vector<rational> c(order + 1);
    for (int j = 0; j <= order; ++j) {
        rational acc = j < static_cast<int>(pnum.size()) ? pnum[static_cast<std::size_t>(j)]
                                                         : rational(0);
        for (int i = 1; i <= j && i < static_cast<int>(qden.size()); ++i)
            acc -= qden[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j - i)];
        c[static_cast<std::size_t>(j)] = acc;  // q0 = 1
    }
    nlosc::pade_approximant p = nlosc::pade(c, 1, 2);
    REQUIRE(p.num.size() == 2);
    REQUIRE(p.den.size() == 3);
    CHECK(p.num[0] == pnum[0]);
    CHECK(p.num[1] == pnum[1]);
    CHECK(p.den[0] == qden[0]);
    CHECK(p.den[1] == qden[1]);
    CHECK(p.den[2] == qden[2]);
}

TEST_CASE("geometric series gives the exact simple pole") {
    std::vector<rational> c(6, rational(1));  // 1/(1-z)
    nlosc::pade_approximant p = nlosc::pade(c, 1, 1);
    CHECK(p.num[0] == rational(1));
    CHECK(p.den[1] == rational(-1));
    std::vector<std::complex<double>> den;
    for (const auto& d : p.den) den.emplace_back(nlosc::to_double(d), 0.0);
    std::vector<std::complex<double>> roots = nlosc::poly_roots(den);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0] - std::complex<double>(1.0, 0.0)) < 1e-12);
}

TEST_CASE("pade input validation") {
    CHECK_THROWS_AS(nlosc::pade(exp_series(3), 2, 2), nlosc::truncation_too_high);
    CHECK_THROWS_AS(nlosc::pade(exp_series(4), -1, 2), nlosc::out_of_domain);
}

TEST_CASE("pade evaluation matches the underlying function") {
    nlosc::pade_approximant p = nlosc::pade(exp_series(8), 4, 4);
    for (double x : {-0.5, 0.3, 1.0}) {
        std::complex<double> v = nlosc::pade_eval(p, {x, 0.0});
        CHECK(std::abs(v - std::exp(x)) < 1e-6);  // [4,4] truncation error at |x| <= 1
    }
}

TEST_CASE("polynomial roots: known cubic, sorting, and residual bound") {
    // (z - 1)(z - 2)(z - 3) = -6 + 11 z - 6 z^2 + z^3
    std::vector<std::complex<double>> c = {{-6, 0}, {11, 0}, {-6, 0}, {1, 0}};
    std::vector<std::complex<double>> r = nlosc::poly_roots(c);
    REQUIRE(r.size() == 3);
    CHECK(std::abs(r[0] - std::complex<double>(1, 0)) < 1e-10);
    CHECK(std::abs(r[1] - std::complex<double>(2, 0)) < 1e-10);
    CHECK(std::abs(r[2] - std::complex<double>(3, 0)) < 1e-10);
    for (const auto& root : r) {
        std::complex<double> val = 0.0;
        for (std::size_t j = c.size(); j-- > 0;) val = val * root + c[j];
        double bound = 1e-8 * 11.0 * std::pow(std::max(1.0, std::abs(root)), 3.0);
        CHECK(std::abs(val) <= bound);
    }
}

TEST_CASE("polynomial roots: conjugate pair and zero roots") {
    // z^2 + 4 pi^2: roots +-2 pi i
    std::vector<std::complex<double>> c = {{4 * M_PI * M_PI, 0}, {0, 0}, {1, 0}};
    std::vector<std::complex<double>> r = nlosc::poly_roots(c);
    REQUIRE(r.size() == 2);
    CHECK(std::abs(std::abs(r[0].imag()) - 2 * M_PI) < 1e-12);
    CHECK(std::abs(r[0] - std::conj(r[1])) < 1e-12);
    // z^2 (z - 5): leading zeros of the coefficient list produce zero roots
    std::vector<std::complex<double>> c2 = {{0, 0}, {0, 0}, {-5, 0}, {1, 0}};
    std::vector<std::complex<double>> r2 = nlosc::poly_roots(c2);
    REQUIRE(r2.size() == 3);
    CHECK(std::abs(r2[0]) < 1e-14);
    CHECK(std::abs(r2[1]) < 1e-14);
    CHECK(std::abs(r2[2] - std::complex<double>(5, 0)) < 1e-10);
}

TEST_CASE("degenerate inputs") {
    std::vector<std::complex<double>> constant = {{3, 0}};
    CHECK(nlosc::poly_roots(constant).empty());
    std::vector<std::complex<double>> empty;
    CHECK(nlosc::poly_roots(empty).empty());
}
