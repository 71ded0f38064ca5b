#pragma once

#include <stdexcept>
#include <string>

namespace nlosc {

// Base class for all library failures.  Argument/shape violations and
// numerical failures derive from distinct branches so callers can map them
// to different exit codes.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// --- contract violations (bad inputs, shape mismatches) ---

struct non_unit_constant_term : error {
    explicit non_unit_constant_term(const std::string& what) : error(what) {}
};

struct variable_mismatch : error {
    explicit variable_mismatch(const std::string& what) : error(what) {}
};

struct zero_linear_term : error {
    explicit zero_linear_term(const std::string& what) : error(what) {}
};

struct nonzero_constant : error {
    explicit nonzero_constant(const std::string& what) : error(what) {}
};

struct zero_constant_term : error {
    explicit zero_constant_term(const std::string& what) : error(what) {}
};

struct truncation_too_high : error {
    explicit truncation_too_high(const std::string& what) : error(what) {}
};

struct out_of_domain : error {
    explicit out_of_domain(const std::string& what) : error(what) {}
};

// --- numerical failures ---

struct numerical_error : error {
    explicit numerical_error(const std::string& what) : error(what) {}
};

struct tolerance_not_reached : numerical_error {
    explicit tolerance_not_reached(const std::string& what) : numerical_error(what) {}
};

struct step_size_underflow : numerical_error {
    explicit step_size_underflow(const std::string& what) : numerical_error(what) {}
};

struct insufficient_span : numerical_error {
    explicit insufficient_span(const std::string& what) : numerical_error(what) {}
};

struct no_convergence : numerical_error {
    explicit no_convergence(const std::string& what) : numerical_error(what) {}
};

// Exactly singular Toeplitz system; carries the defective Pade order so a
// scan can record and skip it.
struct singular_system : numerical_error {
    singular_system(const std::string& what, int m, int n)
        : numerical_error(what), order_m(m), order_n(n) {}
    int order_m;
    int order_n;
};

}  // namespace nlosc
