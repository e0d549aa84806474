#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "petal/coefficients.hpp"

namespace petal {

struct functional_value {
    std::string name;
    cplx value{};
    double abs = 0.0;
};

inline functional_value make_value(std::string name, cplx v) {
    return {std::move(name), v, std::abs(v)};
}

// a3 - mu a2^2
inline functional_value fekete_szego(const coeff_vector& a, cplx mu) {
    return make_value("fekete_szego", a.a3 - mu * a.a2 * a.a2);
}

// Generic Hankel determinant H_{q,n}: det [ a_{n+i+j} ]_{i,j=0..q-1}.
// The named functionals below are thin wrappers; keeping one determinant
// routine means every identity test exercises the same code path.
inline functional_value hankel(int q, int n, const coeff_vector& a) {
    Eigen::MatrixXcd m(q, q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) m(i, j) = a.at(n + i + j);
    return make_value("h" + std::to_string(q) + std::to_string(n), m.determinant());
}

inline functional_value h22(const coeff_vector& a) {
    return make_value("h22", a.a2 * a.a4 - a.a3 * a.a3);
}

inline functional_value h23(const coeff_vector& a) {
    return make_value("h23", a.a3 * a.a5 - a.a4 * a.a4);
}

// 2 a2 a3 a4 - a3^3 - a4^2 - a2^2 a5 + a3 a5
inline functional_value h31(const coeff_vector& a) {
    return make_value("h31", 2.0 * a.a2 * a.a3 * a.a4 - detail::powi(a.a3, 3) - a.a4 * a.a4
                                 - a.a2 * a.a2 * a.a5 + a.a3 * a.a5);
}

struct omega_triple {
    cplx omega1, omega2, omega3;
};

// The three 3x3 minors entering the cofactor expansion of H_{4,1} along its
// last column:
//   Omega1 = a3 a6 - a4 a5 - a2 (a2 a6 - a3 a5) + a4 (a2 a4 - a3^2)
//   Omega2 = (a4 a6 - a5^2) - a2 (a3 a6 - a4 a5) + a3 (a3 a5 - a4^2)
//   Omega3 = a2 (a4 a6 - a5^2) - a3 (a3 a6 - a4 a5) + a4 (a3 a5 - a4^2)
inline omega_triple omegas(const coeff_vector& a) {
    omega_triple o;
    o.omega1 = a.a3 * a.a6 - a.a4 * a.a5 - a.a2 * (a.a2 * a.a6 - a.a3 * a.a5)
             + a.a4 * (a.a2 * a.a4 - a.a3 * a.a3);
    o.omega2 = (a.a4 * a.a6 - a.a5 * a.a5) - a.a2 * (a.a3 * a.a6 - a.a4 * a.a5)
             + a.a3 * (a.a3 * a.a5 - a.a4 * a.a4);
    o.omega3 = a.a2 * (a.a4 * a.a6 - a.a5 * a.a5) - a.a3 * (a.a3 * a.a6 - a.a4 * a.a5)
             + a.a4 * (a.a3 * a.a5 - a.a4 * a.a4);
    return o;
}

// H_{4,1} = a7 H_{3,1} - a6 Omega1 + a5 Omega2 - a4 Omega3; equals the 4x4
// determinant (the tests keep the determinant as an oracle).
inline functional_value h41(const coeff_vector& a) {
    const omega_triple o = omegas(a);
    return make_value("h41", a.a7 * h31(a).value - a.a6 * o.omega1 + a.a5 * o.omega2
                                 - a.a4 * o.omega3);
}

struct named_constant {
    std::string name;
    std::string exact_form;
    double value;
};

// The closed-form bound constants used by the H_{4,1} chain, evaluated from
// their radical expressions (not from the rounded decimals).
inline std::vector<named_constant> reference_constants() {
    const double o1 = (265984.0 + 32000.0 * std::sqrt(3.0 / 43.0)
                       + 37760.0 * std::sqrt(30.0 / 61.0)
                       + 29184.0 * std::sqrt(285.0 / 41.0)) / 460800.0;
    // The expansion polynomial for Omega2 carries the prefactor 3686400
    // (= 8 * 460800); one display line shows 460800, the bound line and the
    // final constant are consistent with 3686400.
    const double o2 = (1136896.0 + 716800.0 * std::sqrt(3.0 / 157.0)
                       + 81920.0 * std::sqrt(3.0 / 67.0)
                       + 212736.0 * std::sqrt(2.0 / 35.0)
                       + 74240.0 * std::sqrt(21.0 / 307.0)
                       + 10240.0 * std::sqrt(6.0 / 23.0)) / 3686400.0;
    const double o3 = (221394816.0 + 55296000.0 * std::sqrt(6.0 / 599.0)
                       + 79626240.0 * std::sqrt(6.0 / 77.0)
                       + 185794560.0 * std::sqrt(21.0 / 251.0)
                       + 79626240.0 * std::sqrt(6.0 / 23.0)
                       + 5971968.0 * std::sqrt(10.0)) / 597196800.0;
    return {
        {"omega1_bound",
         "(265984 + 32000 sqrt(3/43) + 37760 sqrt(30/61) + 29184 sqrt(285/41)) / 460800", o1},
        {"omega2_bound",
         "(1136896 + 716800 sqrt(3/157) + 81920 sqrt(3/67) + 212736 sqrt(2/35) + "
         "74240 sqrt(21/307) + 10240 sqrt(6/23)) / 3686400", o2},
        {"omega3_bound",
         "(221394816 + 55296000 sqrt(6/599) + 79626240 sqrt(6/77) + 185794560 sqrt(21/251) + "
         "79626240 sqrt(6/23) + 5971968 sqrt(10)) / 597196800", o3},
        {"a6_bound", "18688/28800 = 146/225", 146.0 / 225.0},
        {"a7_chain_total", "1791448/2073600", 1791448.0 / 2073600.0},
        {"a7_stated", "1031/1080", 1031.0 / 1080.0},
        {"a5_bound", "907/1632", 907.0 / 1632.0},
    };
}

} // namespace petal
