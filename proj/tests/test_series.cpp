#include <catch2/catch_amalgamated.hpp>

#include "petal/series.hpp"

using namespace petal;

namespace {
double dist(const truncated_series& a, const truncated_series& b) {
    double worst = 0.0;
    const int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}
}

TEST_CASE("construction and access") {
    truncated_series s(5);
    REQUIRE(s.order() == 5);
    for (int k = 0; k <= 5; ++k) REQUIRE(s[k] == cplx(0.0));

    const auto m = truncated_series::monomial(3, cplx(2.0), 6);
    REQUIRE(m[3] == cplx(2.0));
    REQUIRE(m[0] == cplx(0.0));
    REQUIRE(m.order() == 6);

    truncated_series lit{1.0, 2.0, 3.0};
    REQUIRE(lit.order() == 2);
    REQUIRE(lit[2] == cplx(3.0));
}

TEST_CASE("ring operations truncate consistently") {
    const auto z = truncated_series::monomial(1, 1.0, 8);
    const auto z2 = mul(z, z);
    REQUIRE(z2[2] == cplx(1.0));
    REQUIRE(z2.order() == 8);

    // (1+z)^2 = 1 + 2z + z^2; products keep the smaller working order,
    // so the operands need room for the quadratic term.
    truncated_series one_plus(4);
    one_plus[0] = 1.0;
    one_plus[1] = 1.0;
    const auto sq = mul(one_plus, one_plus);
    REQUIRE(sq.order() == 4);
    REQUIRE(sq[0] == cplx(1.0));
    REQUIRE(sq[1] == cplx(2.0));
    REQUIRE(sq[2] == cplx(1.0));
    REQUIRE(sq[3] == cplx(0.0));

    const auto diff = (z + z2) - z2;
    REQUIRE(dist(diff, z) < 1e-15);
}

TEST_CASE("division inverts multiplication") {
    truncated_series a(10), b(10);
    a[0] = 1.0; a[1] = cplx(0.3, -0.1); a[3] = 0.5; a[7] = cplx(0.0, 2.0);
    b[0] = cplx(2.0, 1.0); b[2] = -0.25; b[5] = 0.125;
    const auto q = div(mul(a, b), b);
    REQUIRE(dist(q, a) < 1e-13);

    truncated_series zero_lead(4);
    REQUIRE_THROWS_AS(div(a, zero_lead), zero_leading_coefficient);
}

TEST_CASE("exp is a homomorphism on zero-constant series") {
    const auto e = exp(truncated_series::monomial(1, 1.0, 6));
    REQUIRE(std::abs(e[0] - cplx(1.0)) < 1e-15);
    REQUIRE(std::abs(e[1] - cplx(1.0)) < 1e-15);
    REQUIRE(std::abs(e[2] - cplx(0.5)) < 1e-15);
    REQUIRE(std::abs(e[3] - cplx(1.0 / 6.0)) < 1e-15);

    truncated_series a(12), b(12);
    a[1] = 0.7; a[2] = cplx(-0.2, 0.4);
    b[1] = cplx(0.1, -0.3); b[4] = 0.9;
    REQUIRE(dist(exp(a + b), mul(exp(a), exp(b))) < 1e-12);

    truncated_series off(3);
    off[0] = 0.5;
    REQUIRE_THROWS_AS(exp(off), nonzero_constant_term);
}

TEST_CASE("asinh and sinh are mutually inverse near zero") {
    truncated_series w(14);
    w[1] = 0.6; w[2] = cplx(-0.1, 0.2); w[3] = 0.05;
    const auto s = compose(asinh_series(14), w);
    REQUIRE(dist(compose(sinh_series(14), s), w) < 1e-12);
}

TEST_CASE("asinh reproduces its Maclaurin coefficients") {
    const auto s = asinh_series(9);
    // asinh z = z - z^3/6 + 3 z^5/40 - 15 z^7/336 + ...
    REQUIRE(std::abs(s[1] - cplx(1.0)) < 1e-15);
    REQUIRE(std::abs(s[3] - cplx(-1.0 / 6.0)) < 1e-15);
    REQUIRE(std::abs(s[5] - cplx(3.0 / 40.0)) < 1e-15);
    REQUIRE(std::abs(s[7] - cplx(-15.0 / 336.0)) < 1e-15);
    REQUIRE(std::abs(s[2]) + std::abs(s[4]) + std::abs(s[6]) == 0.0);
}

TEST_CASE("compose requires a zero constant term on the inner series") {
    truncated_series inner(4);
    inner[0] = 1.0;
    REQUIRE_THROWS_AS(compose(sinh_series(4), inner), nonzero_constant_term);
}

TEST_CASE("eval agrees with Horner on a polynomial") {
    truncated_series p{1.0, -2.0, 0.0, 4.0};
    const cplx z(0.3, -0.2);
    REQUIRE(std::abs(p.eval(z) - (1.0 - 2.0 * z + 4.0 * z * z * z)) < 1e-15);
}

TEST_CASE("integrate_over_t divides the k-th coefficient by k") {
    truncated_series g(6);
    g[2] = 3.0; g[5] = cplx(0.0, 10.0);
    const auto h = integrate_over_t(g);
    REQUIRE(std::abs(h[2] - cplx(1.5)) < 1e-15);
    REQUIRE(std::abs(h[5] - cplx(0.0, 2.0)) < 1e-15);
    REQUIRE(std::abs(h[0]) == 0.0);

    truncated_series bad(3);
    bad[0] = 1.0;
    REQUIRE_THROWS_AS(integrate_over_t(bad), nonzero_constant_term);
}
