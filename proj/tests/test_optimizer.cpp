#include <catch2/catch_amalgamated.hpp>

#include "petal/functionals.hpp"
#include "petal/optimizer.hpp"

using namespace petal;

TEST_CASE("quadratic maximum over [0,4], all three branches") {
    // vertex branch: B > 0, A <= -B/8
    const auto v = quad_max<rational>(rational(-17, 144), rational(11, 12), rational(0));
    REQUIRE(v.max == rational(121, 68));
    REQUIRE(v.argmax == rational(66, 17));

    // endpoint t = 0: B <= 0, A <= -B/4
    const auto left = quad_max<rational>(rational(1, 10), rational(-1), rational(3));
    REQUIRE(left.max == rational(3));
    REQUIRE(left.argmax == rational(0));

    // endpoint t = 4: B >= 0, A >= -B/8
    const auto right = quad_max<rational>(rational(1), rational(1), rational(1));
    REQUIRE(right.max == rational(21));
    REQUIRE(right.argmax == rational(4));

    // same branches in floating point
    const auto vd = quad_max<double>(-17.0 / 144.0, 11.0 / 12.0, 0.0);
    REQUIRE(vd.max == Catch::Approx(121.0 / 68.0));
    REQUIRE(vd.argmax == Catch::Approx(66.0 / 17.0));
}

TEST_CASE("fifth-coefficient decomposition bound is exactly rational") {
    REQUIRE(a5_decomposition_bound() == rational(907, 1632));
}

TEST_CASE("governing surface values and domain guards") {
    // corner (0,0,1) is the global maximum 1/9
    REQUIRE(eval_M(0.0, 0.0, 1.0) == Catch::Approx(1.0 / 9.0).margin(1e-15));
    // the p = 2 face is flat
    REQUIRE(eval_M(2.0, 0.3, 0.7) == Catch::Approx(25.0 / 1296.0).margin(1e-12));
    REQUIRE(eval_M(2.0, 0.9, 0.1) == Catch::Approx(25.0 / 1296.0).margin(1e-12));
    // the (p,x) = (0,1) edge is flat at 1/16
    REQUIRE(eval_M(0.0, 1.0, 0.123) == Catch::Approx(0.0625).margin(1e-12));

    REQUIRE_THROWS_AS(eval_M(-0.1, 0.5, 0.5), domain_violation);
    REQUIRE_THROWS_AS(eval_M(1.0, 1.5, 0.5), domain_violation);
    REQUIRE_THROWS_AS(eval_M23(1.0, 0.5, -0.01), domain_violation);
}

TEST_CASE("cuboid maximum of the third-order surface") {
    const auto r = cuboid_max([](double p, double x, double y) { return eval_M(p, x, y); }, 101);
    REQUIRE(r.max_value <= 1.0 / 9.0 + 1e-4);
    REQUIRE(r.max_value >= 1.0 / 9.0 - 1e-6);
    REQUIRE(std::abs(r.argmax[0]) < 1e-3);
    REQUIRE(std::abs(r.argmax[1]) < 1e-3);
    REQUIRE(std::abs(r.argmax[2] - 1.0) < 1e-3);
    REQUIRE(r.interior_critical_points.empty());
    REQUIRE_FALSE(r.face_edge_table.empty());

    // every region maximum is dominated by the global one
    for (const auto& reg : r.face_edge_table)
        REQUIRE(reg.max_value <= r.max_value + 1e-12);
}

TEST_CASE("cuboid maximum of the companion surface") {
    const auto r = cuboid_max([](double p, double x, double y) { return eval_M23(p, x, y); }, 101);
    REQUIRE(r.max_value == Catch::Approx(1.0 / 9.0).margin(1e-4));
    REQUIRE(std::abs(r.argmax[2] - 1.0) < 1e-3);
}

TEST_CASE("polynomial roots by bisection") {
    // (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
    const auto cubic = poly_roots({-6.0, 11.0, -6.0, 1.0}, 0.0, 4.0);
    REQUIRE(cubic.size() == 3);
    REQUIRE(cubic[0] == Catch::Approx(1.0).margin(1e-9));
    REQUIRE(cubic[1] == Catch::Approx(2.0).margin(1e-9));
    REQUIRE(cubic[2] == Catch::Approx(3.0).margin(1e-9));

    // the stationary-candidate polynomial has a single root below 2
    const std::vector<double> c = {0.0,      294912.0, 0.0, -460800.0, 0.0,
                                   239904.0, 0.0,      -44816.0, 0.0, 1275.0};
    const auto roots = poly_roots(c, 0.05, 2.0);
    REQUIRE(roots.size() == 1);
    REQUIRE(roots[0] == Catch::Approx(1.20623).margin(1e-4));
}

TEST_CASE("edge maxima match the frozen landmarks") {
    const auto pr = edge_functions();
    REQUIRE(pr.edges.size() == 5);

    const auto [v1, t1] = edge_max(pr.edges[0]);
    REQUIRE(v1 == Catch::Approx(ref::r1_max).margin(1e-4));
    REQUIRE(t1 == Catch::Approx(ref::r1_argmax).margin(1e-3));

    const auto [v3, t3] = edge_max(pr.edges[2]);
    REQUIRE(v3 == Catch::Approx(ref::r3_max).margin(1e-4));
    REQUIRE(t3 == Catch::Approx(ref::r3_argmax).margin(1e-3));

    const auto [v5, t5] = edge_max(pr.edges[4]);
    REQUIRE(v5 == Catch::Approx(ref::r5_max).margin(1e-4));
    REQUIRE(t5 == Catch::Approx(1.0 / std::sqrt(3.0)).margin(1e-3));
}

TEST_CASE("displayed helpers differ from the true restrictions by small amounts") {
    // the helper expressions are as displayed; the true restrictions of M
    // deviate by cubic-in-x amounts that never move a conclusion
    double n1_lo = 1e9, n1_hi = -1e9, r2_lo = 1e9, r2_hi = -1e9;
    for (int i = 0; i <= 300; ++i) {
        for (int j = 0; j <= 6; ++j) {
            const double g = restriction_gap("n1", i / 300.0, j / 6.0);
            n1_lo = std::min(n1_lo, g);
            n1_hi = std::max(n1_hi, g);
        }
        const double g2 = restriction_gap("r2", 2.0 * i / 300.0, 0.0);
        r2_lo = std::min(r2_lo, g2);
        r2_hi = std::max(r2_hi, g2);
    }
    REQUIRE(n1_lo >= -1e-12);
    REQUIRE(n1_hi <= 1.0 / 16.0 + 1e-9);
    REQUIRE(r2_lo >= -0.06);
    REQUIRE(r2_hi <= 1e-3);
}

TEST_CASE("feasibility window brackets the y-critical regime") {
    const auto w = feasibility_scan();
    REQUIRE(w.p_low == Catch::Approx(1.484217).margin(1e-4));
    REQUIRE(w.p_high == Catch::Approx(2.0).margin(1e-9));
    REQUIRE(w.x_low == Catch::Approx(0.0).margin(1e-9));
    REQUIRE(w.x_high == Catch::Approx(17.0 / 54.0).margin(1e-9));
    REQUIRE(feasible_h1(1.6, 0.1));
    REQUIRE_FALSE(feasible_h1(1.0, 0.1));
}

TEST_CASE("witness search attains the classical sharp bounds") {
    const auto a3 = witness_search(
        "a3", [](const coeff_vector& a) { return std::abs(a.a3); }, 0.5, 2000, 11);
    REQUIRE(a3.best_value >= 0.5 - 1e-3);
    REQUIRE_FALSE(a3.violation);
    REQUIRE(a3.witness.admissible != verdict::no);

    const auto h = witness_search(
        "h31", [](const coeff_vector& a) { return h31(a).abs; }, 1.0 / 9.0, 2000, 11);
    REQUIRE(h.best_value >= 1.0 / 9.0 - 1e-3);
    REQUIRE_FALSE(h.violation);
}

TEST_CASE("witness search is reproducible for a fixed seed") {
    auto run = [] {
        return witness_search(
            "a4", [](const coeff_vector& a) { return std::abs(a.a4); }, 1.0 / 3.0, 1500, 3);
    };
    const auto r1 = run();
    const auto r2 = run();
    REQUIRE(r1.best_value == r2.best_value);
    REQUIRE(r1.samples == r2.samples);
    for (std::size_t k = 0; k < r1.witness.p.size(); ++k)
        REQUIRE(r1.witness.p[k] == r2.witness.p[k]);
}
