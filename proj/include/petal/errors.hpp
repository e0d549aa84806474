#pragma once

#include <stdexcept>
#include <string>

namespace petal {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct zero_leading_coefficient : error {
    zero_leading_coefficient() : error("division by a series with (near-)zero constant term") {}
};

struct nonzero_constant_term : error {
    explicit nonzero_constant_term(const std::string& op)
        : error(op + " requires a series with zero constant term") {}
};

struct insufficient_coefficients : error {
    insufficient_coefficients(std::size_t got, std::size_t need)
        : error("need " + std::to_string(need) + " coefficients, got " + std::to_string(got)) {}
};

struct domain_violation : error {
    explicit domain_violation(const std::string& what) : error(what) {}
};

struct inadmissible_input : error {
    inadmissible_input() : error("input vector fails the Toeplitz admissibility test") {}
};

struct series_unreliable : error {
    explicit series_unreliable(double tail)
        : error("truncation tail estimate " + std::to_string(tail) + " exceeds the trust threshold") {}
};

struct unknown_functional : error {
    explicit unknown_functional(const std::string& name) : error("unknown functional: " + name) {}
};

} // namespace petal
