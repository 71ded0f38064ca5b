#pragma once

// Exact arbitrary-precision rational arithmetic.  boost::multiprecision's
// cpp_rational keeps gcd(|num|, den) = 1 and den > 0 after every operation,
// which is exactly the invariant the series layer relies on.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace nlosc {

using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

inline double to_double(const rational& r) { return r.template convert_to<double>(); }
inline double to_double(double x) { return x; }

// "p/q", or just "p" when q = 1.
inline std::string to_string(const rational& r) {
    bigint num = boost::multiprecision::numerator(r);
    bigint den = boost::multiprecision::denominator(r);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

// rational * pi^pi_power, compared exactly on the pair (never through floats).
struct pi_scaled_rational {
    rational value;
    int pi_power = 0;

    friend bool operator==(const pi_scaled_rational& a, const pi_scaled_rational& b) {
        return a.value == b.value && (a.pi_power == b.pi_power || a.value == 0);
    }
    friend bool operator!=(const pi_scaled_rational& a, const pi_scaled_rational& b) {
        return !(a == b);
    }
};

}  // namespace nlosc
