#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "petal/constants.hpp"
#include "petal/errors.hpp"

namespace petal {

using cplx = std::complex<double>;

// Maclaurin coefficients c0..cN at a fixed truncation order N. All
// operations truncate to the shorter operand; nothing ever reads past
// index N, so a result is exact whenever the inputs are exact to their
// stated order.
class truncated_series {
public:
    explicit truncated_series(int order) : c_(static_cast<std::size_t>(order) + 1) {}

    truncated_series(std::initializer_list<cplx> coeffs) : c_(coeffs) {
        if (c_.empty()) c_.resize(1);
    }

    static truncated_series from_coeffs(std::vector<cplx> coeffs) {
        truncated_series s(0);
        if (coeffs.empty()) coeffs.resize(1);
        s.c_ = std::move(coeffs);
        return s;
    }

    // z^k scaled by a, truncated at `order`
    static truncated_series monomial(int k, cplx a, int order) {
        truncated_series s(order);
        if (k <= order) s.c_[static_cast<std::size_t>(k)] = a;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    cplx operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    cplx& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<cplx>& coeffs() const { return c_; }

    // Horner evaluation at a point (used by the membership sampler).
    cplx eval(cplx z) const {
        cplx acc = 0.0;
        for (int k = order(); k >= 0; --k) acc = acc * z + c_[static_cast<std::size_t>(k)];
        return acc;
    }

    truncated_series truncated(int order) const {
        truncated_series s(order);
        const int m = std::min(order, this->order());
        for (int k = 0; k <= m; ++k) s[k] = (*this)[k];
        return s;
    }

private:
    std::vector<cplx> c_;
};

inline truncated_series add(const truncated_series& a, const truncated_series& b) {
    truncated_series r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
    return r;
}

inline truncated_series sub(const truncated_series& a, const truncated_series& b) {
    truncated_series r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
    return r;
}

inline truncated_series scale(const truncated_series& a, cplx s) {
    truncated_series r = a;
    for (int k = 0; k <= r.order(); ++k) r[k] *= s;
    return r;
}

// Cauchy product.
inline truncated_series mul(const truncated_series& a, const truncated_series& b) {
    const int n = std::min(a.order(), b.order());
    truncated_series r(n);
    for (int k = 0; k <= n; ++k) {
        cplx acc = 0.0;
        for (int j = 0; j <= k; ++j) acc += a[j] * b[k - j];
        r[k] = acc;
    }
    return r;
}

// Quotient q with mul(q, b) == a through the common order; solves the
// triangular system q_k = (a_k - sum_{j>=1} b_j q_{k-j}) / b_0.
inline truncated_series div(const truncated_series& a, const truncated_series& b) {
    if (std::abs(b[0]) < 1e-14) throw zero_leading_coefficient{};
    const int n = std::min(a.order(), b.order());
    truncated_series q(n);
    for (int k = 0; k <= n; ++k) {
        cplx acc = a[k];
        for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    return q;
}

// exp of a series with zero constant term, via (e^a)' = a' e^a:
//   g_k = (1/k) sum_{j=1..k} j a_j g_{k-j},  g_0 = 1.
inline truncated_series exp(const truncated_series& a) {
    if (std::abs(a[0]) > tol::algebra) throw nonzero_constant_term{"exp"};
    truncated_series g(a.order());
    g[0] = 1.0;
    for (int k = 1; k <= a.order(); ++k) {
        cplx acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * g[k - j];
        g[k] = acc / static_cast<double>(k);
    }
    return g;
}

// outer(inner(z)) by Horner over the outer coefficients; inner must vanish
// at 0 so the composition is well-defined order by order.
inline truncated_series compose(const truncated_series& outer, const truncated_series& inner) {
    if (std::abs(inner[0]) > tol::algebra) throw nonzero_constant_term{"compose"};
    const int n = std::min(outer.order(), inner.order());
    truncated_series acc(n);
    for (int k = n; k >= 0; --k) {
        acc = mul(acc, inner.truncated(n));
        acc[0] += outer[k];
    }
    return acc;
}

// Maclaurin series of sinh^{-1}: sum over m of
//   (-1)^m (2m)! / (4^m (m!)^2 (2m+1)) z^{2m+1}
// = z - z^3/6 + 3 z^5/40 - 15 z^7/336 + ...
// The ratio between consecutive odd-power coefficients is
// -(2m-1)^2 / (2m (2m+1)), which keeps the computation overflow-free.
inline truncated_series asinh_series(int order) {
    truncated_series s(order);
    double c = 1.0;
    for (int m = 0; 2 * m + 1 <= order; ++m) {
        s[2 * m + 1] = c;
        const double tm = 2.0 * m;
        c *= -((tm + 1.0) * (tm + 1.0)) / ((tm + 2.0) * (tm + 3.0));
    }
    return s;
}

// Maclaurin series of sinh: z + z^3/3! + z^5/5! + ...
inline truncated_series sinh_series(int order) {
    truncated_series s(order);
    double c = 1.0;
    for (int m = 0; 2 * m + 1 <= order; ++m) {
        s[2 * m + 1] = c;
        c /= (2.0 * m + 2.0) * (2.0 * m + 3.0);
    }
    return s;
}

// int_0^z a(t)/t dt, termwise: c_k z^k -> (c_k / k) z^k. Needs a(0)=0 so
// the integrand is analytic at the origin.
inline truncated_series integrate_over_t(const truncated_series& a) {
    if (std::abs(a[0]) > tol::algebra) throw nonzero_constant_term{"integrate_over_t"};
    truncated_series r(a.order());
    for (int k = 1; k <= a.order(); ++k) r[k] = a[k] / static_cast<double>(k);
    return r;
}

inline truncated_series operator*(const truncated_series& a, const truncated_series& b) { return mul(a, b); }
inline truncated_series operator/(const truncated_series& a, const truncated_series& b) { return div(a, b); }
inline truncated_series operator+(const truncated_series& a, const truncated_series& b) { return add(a, b); }
inline truncated_series operator-(const truncated_series& a, const truncated_series& b) { return sub(a, b); }

} // namespace petal
