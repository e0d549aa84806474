#pragma once

#include <array>

#include "petal/caratheodory.hpp"
#include "petal/series.hpp"

namespace petal {

// a2..a7 of a normalized member f(z) = z + sum a_n z^n whose logarithmic
// derivative is subordinate to 1 + asinh(z). a1 = 1 is implicit.
struct coeff_vector {
    cplx a2{}, a3{}, a4{}, a5{}, a6{}, a7{};

    cplx at(int n) const {  // 1-based
        if (n < 1) throw domain_violation("coefficient index must be at least 1");
        switch (n) {
            case 1: return 1.0;
            case 2: return a2;
            case 3: return a3;
            case 4: return a4;
            case 5: return a5;
            case 6: return a6;
            case 7: return a7;
            default: throw insufficient_coefficients(7, static_cast<std::size_t>(n));
        }
    }
};

namespace detail {
inline cplx powi(cplx z, int n) {
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}
} // namespace detail

// Closed forms obtained by matching coefficients in z f'(z) = (1 + asinh(w(z))) f(z)
// with w = (p-1)/(p+1). The a7 line ends with +p6/12: the recurrence forces that
// term (a circulating transcription drops it), and the cross-check against
// coeffs_from_schwarz only passes with it present.
inline coeff_vector coeffs_from_p(const p_vector& pv) {
    if (pv.size() < 6) throw insufficient_coefficients(pv.size(), 6);
    using detail::powi;
    const cplx p1 = pv.at(1), p2 = pv.at(2), p3 = pv.at(3),
               p4 = pv.at(4), p5 = pv.at(5), p6 = pv.at(6);
    coeff_vector a;
    a.a2 = p1 / 2.0;
    a.a3 = p2 / 4.0;
    a.a4 = (-powi(p1, 3) - 6.0 * p1 * p2 + 24.0 * p3) / 144.0;
    a.a5 = (5.0 * powi(p1, 4) - 6.0 * p1 * p1 * p2 - 36.0 * p2 * p2
            - 48.0 * p1 * p3 + 144.0 * p4) / 1152.0;
    a.a6 = (-54.0 * powi(p1, 5) + 355.0 * powi(p1, 3) * p2 + 150.0 * p1 * p2 * p2
            - 1680.0 * p2 * p3 - 1080.0 * p1 * p4 + 2880.0 * p5) / 28800.0;
    a.a7 = (1031.0 * powi(p1, 6) - 17220.0 * powi(p1, 4) * p2 + 26100.0 * p1 * p1 * p2 * p2
            + 9000.0 * powi(p2, 3) + 19200.0 * powi(p1, 3) * p3 + 33120.0 * p1 * p2 * p3
            - 57600.0 * p3 * p3 + 4320.0 * p1 * p1 * p4 - 108000.0 * p2 * p4
            - 69120.0 * p1 * p5) / 2073600.0
           + p6 / 12.0;
    return a;
}

// Derived from the subordination relation z f' = (1 + asinh(w)) f, read off
// order by order:  (n-1) a_n = sum_{j=1..n-1} a_j s_{n-j},  s := asinh(w).
// This route involves no long transcribed polynomial, so it is the oracle
// of record whenever the closed forms are in question.
inline coeff_vector coeffs_from_schwarz(const truncated_series& w) {
    if (std::abs(w[0]) > tol::algebra) throw nonzero_constant_term{"coeffs_from_schwarz"};
    const int n = std::max(w.order(), 7);
    const truncated_series s = compose(asinh_series(n), w.truncated(n));
    std::array<cplx, 8> a{};  // a[1..7]
    a[1] = 1.0;
    for (int k = 2; k <= 7; ++k) {
        cplx acc = 0.0;
        for (int j = 1; j < k; ++j) acc += a[static_cast<std::size_t>(j)] * s[k - j];
        a[static_cast<std::size_t>(k)] = acc / static_cast<double>(k - 1);
    }
    return {a[2], a[3], a[4], a[5], a[6], a[7]};
}

// w = (p - 1)/(p + 1) as a truncated series, from the first `order`
// p-coefficients (missing ones are treated as zero: only w_1..w_order are
// consumed downstream).
inline truncated_series schwarz_from_p(const p_vector& pv, int order = default_order) {
    truncated_series num(order), den(order);
    num[0] = 0.0;
    den[0] = 2.0;
    for (int k = 1; k <= order; ++k) {
        const cplx pk = static_cast<std::size_t>(k) <= pv.size() ? pv.at(static_cast<std::size_t>(k)) : cplx{0.0};
        num[k] = pk;
        den[k] = pk;
    }
    return div(num, den);
}

// Full series of f itself: f = z exp(int asinh(w(t))/t dt).
inline truncated_series member_series_from_schwarz(const truncated_series& w, int order = default_order) {
    const truncated_series s = compose(asinh_series(order), w.truncated(order));
    const truncated_series g = exp(integrate_over_t(s));
    truncated_series f(order);
    for (int k = 1; k <= order; ++k) f[k] = g[k - 1];
    return f;
}

} // namespace petal
