#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "petal/caratheodory.hpp"
#include "petal/coefficients.hpp"
#include "petal/constants.hpp"
#include "petal/errors.hpp"
#include "petal/series.hpp"

namespace petal {

struct membership_report {
    bool member = false;
    double worst_modulus = 0.0;  // max over samples of |sinh(s(z) - 1)|
    double worst_tail = 0.0;     // max truncation-tail estimate across radii
    cplx worst_z{};
    int samples = 0;
};

// How a member was built; retained so reports can say what they checked.
enum class origin { raw, extremal_power, from_p, from_schwarz };

// A normalized analytic function f(z) = z + a2 z^2 + ... kept as a truncated
// series. Membership in the class is decided by checking the subordination
// target pointwise: zf'/f must land in 1 + asinh(D).
class class_member {
  public:
    explicit class_member(truncated_series f, origin o = origin::raw, int power = 0)
        : f_(std::move(f)), origin_(o), power_(power) {
        if (f_.order() < 4) throw insufficient_coefficients(f_.order(), 4);
        if (std::abs(f_[0]) > tol::algebra || std::abs(f_[1] - 1.0) > tol::algebra)
            throw inadmissible_input();
    }

    origin provenance() const { return origin_; }
    std::string describe() const {
        switch (origin_) {
            case origin::extremal_power: return "extremal(" + std::to_string(power_) + ")";
            case origin::from_p: return "from_p";
            case origin::from_schwarz: return "from_schwarz";
            default: return "series";
        }
    }

    const truncated_series& series() const { return f_; }
    int order() const { return f_.order(); }

    // a_n, 1-based
    cplx coeff(int n) const {
        if (n < 1 || n > f_.order()) throw insufficient_coefficients(f_.order(), n);
        return f_[n];
    }

    coeff_vector coefficients() const {
        if (f_.order() < 7) throw insufficient_coefficients(f_.order(), 7);
        return {f_[2], f_[3], f_[4], f_[5], f_[6], f_[7]};
    }

    cplx eval(cplx z) const { return f_.eval(z); }

    // s = zf'/f as a truncated series; s(0) = 1. Both numerator and
    // denominator carry a simple zero at 0, so divide the shifted series.
    truncated_series log_derivative() const {
        const int n = f_.order() - 1;
        truncated_series num(n), den(n);
        for (int k = 0; k <= n; ++k) {
            num[k] = static_cast<double>(k + 1) * f_[k + 1];
            den[k] = f_[k + 1];
        }
        return div(num, den);
    }

    // the Schwarz function w = sinh(s - 1) induced by the subordination
    truncated_series schwarz() const {
        truncated_series s = log_derivative();
        s[0] -= 1.0;
        return compose(sinh_series(s.order()), s);
    }

    // Truncation-tail heuristic at radius r: the dropped part of the series
    // is modelled geometrically off the last three retained coefficients,
    //   tail(r) := max(|c_{N-2}|, |c_{N-1}|, |c_N|) r^{N+1} / (1 - r),
    // a desk-scale substitute for an analytic remainder bound.
    double tail_estimate(double r) const {
        const int n = f_.order();
        const double m = std::max({std::abs(f_[n]), std::abs(f_[n - 1]), std::abs(f_[n - 2])});
        return m * std::pow(r, n + 1) / (1.0 - r);
    }

    // Pointwise check of |sinh(zf'/f - 1)| < 1 + 1e-6 on circles of the
    // given radii. The verdict is issued only when the tail estimate cannot
    // flip it:
    //   - some sample exceeds the threshold by more than its circle's tail:
    //     definitive failure (worst offender reported);
    //   - every sample clears the threshold with its tail added: member;
    //   - otherwise, a tail above 1e-4 means the order cannot resolve the
    //     question; below that the literal comparison decides.
    membership_report check_membership(
        const std::vector<double>& radii = {0.5, 0.9, 0.95}, int angles = 720) const {
        membership_report rep;
        const int n = f_.order();
        if (n < 6) throw insufficient_coefficients(n, 6);
        for (double r : radii)
            if (r <= 0.0 || r >= 1.0) throw domain_violation("membership radii lie in (0,1)");

        auto s_at = [this, n](cplx z) -> cplx {
            cplx num = 0.0, den = 0.0;
            for (int k = n; k >= 1; --k) {
                num = num * z + static_cast<double>(k) * f_[k];
                den = den * z + f_[k];
            }
            if (std::abs(den) < 1e-13) throw series_unreliable(1.0 / 1e-13);
            return num / den;
        };

        bool robust_fail = false, robust_pass = true;
        const double two_pi = 6.283185307179586476925286766559;
        for (double r : radii) {
            const double tail = tail_estimate(r);
            rep.worst_tail = std::max(rep.worst_tail, tail);
            for (int j = 0; j < angles; ++j) {
                const cplx z = std::polar(r, two_pi * j / angles);
                const double v = std::abs(std::sinh(s_at(z) - 1.0));
                ++rep.samples;
                if (v > rep.worst_modulus) {
                    rep.worst_modulus = v;
                    rep.worst_z = z;
                }
                robust_fail |= v - tail > 1.0 + tol::audit;
                robust_pass &= v + tail <= 1.0 + tol::audit;
            }
        }
        if (robust_fail) {
            rep.member = false;
            return rep;
        }
        if (robust_pass) {
            rep.member = true;
            return rep;
        }
        if (rep.worst_tail > 1e-4) throw series_unreliable(rep.worst_tail);
        rep.member = rep.worst_modulus <= 1.0 + tol::audit;
        return rep;
    }

  private:
    truncated_series f_;
    origin origin_;
    int power_;
};

// The coefficient-functional extremizers: Schwarz function w = z^n, i.e.
//   f_n(z) = z exp( integral_0^z asinh(t^n) dt / t ).
// Coefficients come out rational; a_{n+1} = 1/n and a_{2n+1} = 1/(2n^2).
inline class_member extremal_fn(int n, int order = default_order) {
    if (n < 1) throw domain_violation("extremal_fn: power must be >= 1");
    return class_member(
        member_series_from_schwarz(truncated_series::monomial(n, 1.0, order), order),
        origin::extremal_power, n);
}

// member built from a Caratheodory vector (admissibility enforced upstream)
inline class_member member_from_p(const p_vector& pv, int order = default_order) {
    if (pv.admissible == verdict::no) throw inadmissible_input();
    return class_member(member_series_from_schwarz(schwarz_from_p(pv, order), order),
                        origin::from_p);
}

inline class_member member_from_schwarz(const truncated_series& w, int order = default_order) {
    return class_member(member_series_from_schwarz(w, order), origin::from_schwarz);
}

// exact low-order coefficient tables for the extremizers, a_1 .. a_11
inline std::vector<double> extremal_reference(int n) {
    switch (n) {
        case 1:
            return {1.0, 1.0, 1.0 / 2, 1.0 / 9, -1.0 / 72, -1.0 / 225,
                    281.0 / 32400, 109.0 / 198450, -55597.0 / 12700800,
                    356.0 / 2679075, 43087469.0 / 17146080000.0};
        case 2:
            return {1.0, 0.0, 1.0 / 2, 0.0, 1.0 / 8, 0.0, -1.0 / 144, 0.0,
                    -13.0 / 1152, 0.0, 247.0 / 57600};
        case 3:
            return {1.0, 0.0, 0.0, 1.0 / 3, 0.0, 0.0, 1.0 / 18, 0.0, 0.0, -1.0 / 81, 0.0};
        case 4:
            return {1.0, 0.0, 0.0, 0.0, 1.0 / 4, 0.0, 0.0, 0.0, 1.0 / 32, 0.0, 0.0};
        case 5:
            return {1.0, 0.0, 0.0, 0.0, 0.0, 1.0 / 5, 0.0, 0.0, 0.0, 0.0, 1.0 / 50};
        case 6:
            return {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0 / 6, 0.0, 0.0, 0.0, 0.0};
        default:
            throw domain_violation("extremal_reference: tables cover n = 1..6");
    }
}

} // namespace petal
