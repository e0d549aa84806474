#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "petal/caratheodory.hpp"
#include "petal/coefficients.hpp"
#include "petal/constants.hpp"
#include "petal/extremal.hpp"
#include "petal/functionals.hpp"
#include "petal/optimizer.hpp"
#include "petal/rng.hpp"

namespace petal {

struct claim_row {
    std::string id;
    std::string reference;  // the quoted constant or identity being checked
    std::string computed;   // what this toolkit finds
    double tol = 0.0;
    std::string status;     // PASS / FLAG / FAIL
    std::string note;
};

struct verify_options {
    std::uint64_t seed = 7;
    int threads = 1;
    long budget = 20000;     // witness-search sampling budget per functional
    int resolution = 201;    // cuboid grid resolution
    std::string claim_filter;  // case-insensitive substring; empty = all
};

struct verify_report {
    std::string version = "1.0.0";
    std::uint64_t seed = 0;
    std::vector<claim_row> claims;

    bool any_fail() const {
        for (const auto& c : claims)
            if (c.status == "FAIL") return true;
        return false;
    }
};

namespace detail {

inline std::string fmt(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.12g", v);
    return b;
}

inline std::string fmt3(const std::array<double, 3>& q) {
    return "(" + fmt(q[0]) + ", " + fmt(q[1]) + ", " + fmt(q[2]) + ")";
}

inline claim_row row(std::string id, std::string ref, std::string comp, double tolv, bool ok,
                     std::string note = "") {
    return {std::move(id), std::move(ref), std::move(comp), tolv, ok ? "PASS" : "FAIL",
            std::move(note)};
}

inline claim_row flag(std::string id, std::string ref, std::string comp, double tolv,
                      std::string note) {
    return {std::move(id), std::move(ref), std::move(comp), tolv, "FLAG", std::move(note)};
}

// random atomic P member: 1..6 atoms, Dirichlet weights, uniform angles
inline p_vector draw_pv(rng64& rng, int n = 6) {
    const int m = 1 + static_cast<int>(rng.below(6));
    std::vector<double> lambda(static_cast<std::size_t>(m)), theta(lambda.size());
    double sum = 0.0;
    for (auto& l : lambda) {
        l = -std::log(1.0 - rng.uniform());
        sum += l;
    }
    for (auto& l : lambda) l /= sum;
    const double two_pi = 6.283185307179586476925286766559;
    for (auto& t : theta) t = rng.uniform(0.0, two_pi);
    return herglotz_atoms(lambda, theta, n);
}

// shared body of COEFF_CONSISTENCY, reused by the determinism rerun row
inline std::string coeff_consistency_computed(std::uint64_t seed) {
    rng64 rng = rng64(seed).fork("COEFF_CONSISTENCY");
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const p_vector pv = draw_pv(rng);
        const coeff_vector direct = coeffs_from_p(pv);
        const coeff_vector via_w = coeffs_from_schwarz(schwarz_from_p(pv));
        for (int k = 2; k <= 7; ++k)
            worst = std::max(worst, std::abs(direct.at(k) - via_w.at(k)));
    }
    return fmt(worst);
}

} // namespace detail

// ---------------------------------------------------------------------------
// The claim table. Each claim is a self-contained recomputation keyed by a
// stable id; randomized claims derive their stream from (seed, id), so the
// report is invariant under filtering and under how claims are scheduled.
// FLAG marks a documented source inconsistency: the check ran, the numbers
// disagree with the quoted value, and the note says how.
// ---------------------------------------------------------------------------
inline std::vector<std::pair<std::string, std::function<claim_row(const verify_options&)>>>
claim_registry() {
    using namespace detail;
    std::vector<std::pair<std::string, std::function<claim_row(const verify_options&)>>> reg;
    auto add = [&reg](std::string id, std::function<claim_row(const verify_options&)> fn) {
        reg.emplace_back(std::move(id), std::move(fn));
    };

    add("A5_DECOMPOSITION_BOUND", [](const verify_options&) {
        const rational r = a5_decomposition_bound();
        const bool ok = r == rational(907, 1632);
        return row("A5_DECOMPOSITION_BOUND", "907/1632 = 0.555759803922",
                   std::to_string(static_cast<long long>(r.numerator())) + "/" +
                       std::to_string(static_cast<long long>(r.denominator())) + " = " +
                       fmt(boost::rational_cast<double>(r)),
                   0.0, ok, "exact rational chain (1/8)(8/3 + max of the |p1| quadratic)");
    });

    add("A5_SHARPNESS_WITNESS", [](const verify_options& opt) {
        // the displayed equality data for |a5| = 907/1632
        const std::vector<cplx> stated = {2.0, cplx(-0.333333, 1.45521), -2.0, 2.0};
        const double mineig = toeplitz_min_eigenvalue(stated);
        auto rep = witness_search(
            "a5", [](const coeff_vector& a) { return std::abs(a.a5); }, 907.0 / 1632.0,
            opt.budget, opt.seed);
        return flag("A5_SHARPNESS_WITNESS",
                    "907/1632 attained at p1 = p4 = 2, p2 = -0.333333 + 1.45521i, p3 = -2",
                    "stated data has Toeplitz minimum eigenvalue " + fmt(mineig) +
                        "; best admissible witness |a5| = " + fmt(rep.best_value),
                    tol::eig_band,
                    "the displayed equality configuration is not a Caratheodory vector "
                    "(p1 = 2 forces every p_n = 2); the quartic-power configuration attains "
                    "1/4 and nothing sampled approaches 907/1632");
    });

    add("A6_BOUND_CONSTANT", [](const verify_options&) {
        const double v = 146.0 / 225.0;
        return row("A6_BOUND_CONSTANT", "0.648889", "18688/28800 = 146/225 = " + fmt(v),
                   tol::audit, std::abs(v - 0.648889) < 1e-6,
                   "one display renders the fraction with denominator 2880; the decimal and "
                   "the chain are consistent with 28800");
    });

    add("A7_PROOF_CONSTANT", [](const verify_options&) {
        const double v = 1791448.0 / 2073600.0;
        return row("A7_PROOF_CONSTANT", "0.863931", "1791448/2073600 = " + fmt(v), tol::audit,
                   std::abs(v - 0.863931) < 1e-6,
                   "sum of the seven term-bounds in the a7 chain");
    });

    add("A7_STATEMENT_MISMATCH", [](const verify_options&) {
        return flag("A7_STATEMENT_MISMATCH", "1031/1080 = " + fmt(1031.0 / 1080.0) + " (stated)",
                    "1791448/2073600 = " + fmt(1791448.0 / 2073600.0) + " (proof chain)",
                    tol::audit,
                    "the stated a7 bound does not match the value its own proof chain "
                    "produces; both are carried, audits use the larger only as a ceiling");
    });

    auto audit_row = [](const verify_options& opt, const std::string& id,
                        const std::string& refname, double bound,
                        std::function<double(const coeff_vector&)> f, std::string note = "") {
        rng64 rng = rng64(opt.seed).fork(id);
        double worst = 0.0;
        for (int i = 0; i < 100000; ++i) {
            const coeff_vector a = coeffs_from_p(draw_pv(rng));
            worst = std::max(worst, f(a));
        }
        return row(id, refname, "max over 100000 admissible samples: " + fmt(worst), tol::audit,
                   worst <= bound + tol::audit, std::move(note));
    };
    add("BOUND_AUDIT_A2", [audit_row](const verify_options& o) {
        return audit_row(o, "BOUND_AUDIT_A2", "|a2| <= 1", 1.0,
                         [](const coeff_vector& a) { return std::abs(a.a2); });
    });
    add("BOUND_AUDIT_A3", [audit_row](const verify_options& o) {
        return audit_row(o, "BOUND_AUDIT_A3", "|a3| <= 1/2", 0.5,
                         [](const coeff_vector& a) { return std::abs(a.a3); });
    });
    add("BOUND_AUDIT_A4", [audit_row](const verify_options& o) {
        return audit_row(o, "BOUND_AUDIT_A4", "|a4| <= 1/3", 1.0 / 3.0,
                         [](const coeff_vector& a) { return std::abs(a.a4); });
    });
    add("BOUND_AUDIT_A5", [audit_row](const verify_options& o) {
        return audit_row(o, "BOUND_AUDIT_A5", "|a5| <= 907/1632", 907.0 / 1632.0,
                         [](const coeff_vector& a) { return std::abs(a.a5); },
                         "observed maximum sits near 1/4; see A5_SHARPNESS_WITNESS");
    });
    add("BOUND_AUDIT_A6", [audit_row](const verify_options& o) {
        return audit_row(o, "BOUND_AUDIT_A6", "|a6| <= 146/225", 146.0 / 225.0,
                         [](const coeff_vector& a) { return std::abs(a.a6); });
    });
    add("BOUND_AUDIT_A7", [audit_row](const verify_options& o) {
        return audit_row(o, "BOUND_AUDIT_A7", "|a7| <= 0.863931 (proof-chain value)",
                         1791448.0 / 2073600.0,
                         [](const coeff_vector& a) { return std::abs(a.a7); });
    });
    add("BOUND_AUDIT_H22", [audit_row](const verify_options& o) {
        return audit_row(o, "BOUND_AUDIT_H22", "|H_{2,2}| <= 1/4", 0.25,
                         [](const coeff_vector& a) { return h22(a).abs; });
    });
    add("BOUND_AUDIT_H23", [audit_row](const verify_options& o) {
        return audit_row(o, "BOUND_AUDIT_H23", "|H_{2,3}| <= 0.146048", 0.146048,
                         [](const coeff_vector& a) { return h23(a).abs; },
                         "best observed value stays near 0.11; the quoted constant is an "
                         "upper bound only, its attainability is not reproduced");
    });
    add("BOUND_AUDIT_H31", [audit_row](const verify_options& o) {
        return audit_row(o, "BOUND_AUDIT_H31", "|H_{3,1}| <= 1/9", 1.0 / 9.0,
                         [](const coeff_vector& a) { return h31(a).abs; });
    });
    add("BOUND_AUDIT_H41", [audit_row](const verify_options& o) {
        return audit_row(o, "BOUND_AUDIT_H41", "|H_{4,1}| <= 0.428001", 0.428001,
                         [](const coeff_vector& a) { return h41(a).abs; },
                         "observed maximum is two orders below the quoted constant; see "
                         "H41_ASSEMBLY_CONSTANT for the assembly discrepancy");
    });

    add("COEFF_CONSISTENCY", [](const verify_options& opt) {
        const std::string worst = coeff_consistency_computed(opt.seed);
        return row("COEFF_CONSISTENCY", "0 (closed forms == series recurrence)",
                   "max |difference| over 10000 samples x a2..a7: " + worst, 1e-10,
                   std::stod(worst) <= 1e-10,
                   "the a7 closed form carries the p6/12 term restored from the recurrence; "
                   "a circulating rendering of that equation drops it");
    });

    add("CRITICAL_POLY_ROOT", [](const verify_options&) {
        const std::vector<double> c = {0.0,      294912.0, 0.0, -460800.0, 0.0,
                                       239904.0, 0.0,      -44816.0, 0.0, 1275.0};
        const auto roots = poly_roots(c, 0.05, 2.0);
        const auto win = feasibility_scan();
        const bool one = roots.size() == 1;
        const double r0 = one ? roots[0] : -1.0;
        const bool ok = one && std::abs(r0 - 1.20623) < 1e-4 &&
                        std::abs(win.p_low - 1.484217) < 1e-4 &&
                        std::abs(win.x_high - 17.0 / 54.0) < 1e-6 && r0 < win.p_low;
        return row("CRITICAL_POLY_ROOT", "1.20623, outside the feasibility window",
                   "root " + fmt(r0) + "; window p in (" + fmt(win.p_low) + ", 2), x in (0, " +
                       fmt(win.x_high) + ")",
                   1e-4, ok,
                   "the only stationary candidate sits below the window where the y-critical "
                   "equation is solvable, so the interior contributes no maximum");
    });

    add("DETERMINISM_RERUN", [](const verify_options& opt) {
        const std::string a = coeff_consistency_computed(opt.seed);
        const std::string b = coeff_consistency_computed(opt.seed);
        return row("DETERMINISM_RERUN", "identical repeated evaluation",
                   a == b ? "identical" : a + " != " + b, 0.0, a == b,
                   "same-process replay of a randomized claim; cross-process and "
                   "cross-thread identity is exercised by the acceptance harness");
    });

    auto edge_row = [](const std::string& id, int index, double ref_max, double ref_arg,
                       const std::string& refs, std::string note = "") {
        const auto pr = edge_functions();
        const auto [v, arg] = edge_max(pr.edges[static_cast<std::size_t>(index)]);
        const bool ok = std::abs(v - ref_max) < 1e-4 && std::abs(arg - ref_arg) < 1e-3;
        return row(id, refs, fmt(v) + " at " + fmt(arg), 1e-4, ok, std::move(note));
    };
    add("EDGE_R1_MAX", [edge_row](const verify_options&) {
        return edge_row("EDGE_R1_MAX", 0, 0.0342145, 1.51933, "0.0342145 at p = 1.51933");
    });
    add("EDGE_R3_MAX", [edge_row](const verify_options&) {
        return edge_row("EDGE_R3_MAX", 2, 0.0914236, 1.32162, "0.0914236 at p = 1.32162");
    });
    add("EDGE_R5_MAX", [edge_row](const verify_options&) {
        return edge_row("EDGE_R5_MAX", 4, 0.0481125, 0.5773503,
                        "sqrt(3)/36 = 0.0481125 at x = 1/sqrt(3)",
                        "displayed helpers n1, r2, r4, r5 differ from the true face "
                        "restrictions by x^3/16-sized terms; every governing maximum is "
                        "unchanged, so the conclusions stand");
    });

    add("EXTREMAL_F2_COEFFS", [](const verify_options&) {
        const auto f = extremal_fn(2);
        const double ref[4] = {0.0, 0.5, 0.0, 0.125};
        double worst = 0.0;
        for (int k = 2; k <= 5; ++k)
            worst = std::max(worst, std::abs(f.coeff(k) - ref[k - 2]));
        return row("EXTREMAL_F2_COEFFS", "z + z^3/2 + z^5/8 + ...",
                   "max coefficient deviation " + fmt(worst), tol::algebra,
                   worst <= tol::algebra);
    });
    add("EXTREMAL_F3_COEFFS", [](const verify_options&) {
        const auto f = extremal_fn(3);
        const double ref[6] = {0.0, 0.0, 1.0 / 3.0, 0.0, 0.0, 1.0 / 18.0};
        double worst = 0.0;
        for (int k = 2; k <= 7; ++k)
            worst = std::max(worst, std::abs(f.coeff(k) - ref[k - 2]));
        return row("EXTREMAL_F3_COEFFS", "z + z^4/3 + z^7/18 + ...",
                   "max coefficient deviation " + fmt(worst), tol::algebra,
                   worst <= tol::algebra);
    });
    add("EXTREMAL_FEKETE_SZEGO", [](const verify_options&) {
        const auto v = fekete_szego(extremal_fn(2).coefficients(), 1.0);
        return row("EXTREMAL_FEKETE_SZEGO", "a3 - a2^2 = 1/2 at the second extremizer",
                   fmt(v.value.real()) + (std::abs(v.value.imag()) > 0 ? " + i..." : ""),
                   tol::algebra, std::abs(v.value - cplx(0.5)) <= tol::algebra);
    });
    add("EXTREMAL_H22", [](const verify_options&) {
        const auto v = h22(extremal_fn(2).coefficients());
        return row("EXTREMAL_H22", "-1/4", fmt(v.value.real()), tol::algebra,
                   std::abs(v.value - cplx(-0.25)) <= tol::algebra);
    });
    add("EXTREMAL_H31", [](const verify_options&) {
        const auto v = h31(extremal_fn(3).coefficients());
        return row("EXTREMAL_H31", "-1/9", fmt(v.value.real()), tol::algebra,
                   std::abs(v.value - cplx(-1.0 / 9.0)) <= tol::algebra);
    });

    add("FACE_P0_X1_CONSTANT", [](const verify_options&) {
        double lo = 1e9, hi = -1e9;
        for (int i = 0; i <= 2000; ++i) {
            const double v = eval_M(0.0, 1.0, i / 2000.0);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        const bool ok = std::abs(lo - 1.0 / 16.0) < 1e-4 && std::abs(hi - 1.0 / 16.0) < 1e-4;
        return row("FACE_P0_X1_CONSTANT", "1/16 = 0.0625 (constant in y)",
                   "range [" + fmt(lo) + ", " + fmt(hi) + "]", 1e-4, ok);
    });
    add("FACE_P2_CONSTANT", [](const verify_options&) {
        double lo = 1e9, hi = -1e9;
        for (int i = 0; i <= 400; ++i)
            for (int j = 0; j <= 400; ++j) {
                const double v = eval_M(2.0, i / 400.0, j / 400.0);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        const double ref = 25.0 / 1296.0;
        const bool ok = std::abs(lo - ref) < 1e-4 && std::abs(hi - ref) < 1e-4;
        return row("FACE_P2_CONSTANT", "25/1296 = 0.019290123457 (constant face)",
                   "range [" + fmt(lo) + ", " + fmt(hi) + "]", 1e-4, ok);
    });

    add("H23_CUBOID_MAX", [](const verify_options& opt) {
        const auto r = cuboid_max([](double p, double x, double y) { return eval_M23(p, x, y); },
                                  opt.resolution);
        return row("H23_CUBOID_MAX", "<= 0.146048",
                   fmt(r.max_value) + " at " + fmt3(r.argmax), tol::audit,
                   r.max_value <= 0.146048 + tol::audit,
                   "the companion majorant built here peaks at 1/9, already below the "
                   "quoted constant");
    });
    add("H31_CUBOID_MAX", [](const verify_options& opt) {
        const auto r = cuboid_max([](double p, double x, double y) { return eval_M(p, x, y); },
                                  opt.resolution);
        const double ref = 1.0 / 9.0;
        const bool val_ok = r.max_value <= ref + 1e-4 && r.max_value >= ref - 1e-6;
        const bool arg_ok = std::abs(r.argmax[0]) <= 1e-3 && std::abs(r.argmax[1]) <= 1e-3 &&
                            std::abs(r.argmax[2] - 1.0) <= 1e-3;
        const bool interior_ok = r.interior_critical_points.empty();
        return row("H31_CUBOID_MAX", "1/9 at (0, 0, 1), no interior critical point",
                   fmt(r.max_value) + " at " + fmt3(r.argmax) + "; interior critical points: " +
                       std::to_string(r.interior_critical_points.size()),
                   1e-4, val_ok && arg_ok && interior_ok);
    });

    add("H41_ASSEMBLY_CONSTANT", [](const verify_options&) {
        const auto cs = reference_constants();
        auto get = [&cs](const std::string& n) {
            for (const auto& c : cs)
                if (c.name == n) return c.value;
            return 0.0;
        };
        const double assembled = get("a7_chain_total") * (1.0 / 9.0) +
                                 get("a6_bound") * get("omega1_bound") +
                                 get("a5_bound") * get("omega2_bound") +
                                 (1.0 / 3.0) * get("omega3_bound");
        return flag("H41_ASSEMBLY_CONSTANT", "0.428001 (quoted)",
                    "|a7|/9 + |a6| Omega1 + |a5| Omega2 + |a4| Omega3 = " + fmt(assembled),
                    tol::audit,
                    "substituting the displayed ingredient bounds into the cofactor "
                    "expansion gives " + fmt(assembled) +
                        ", not the quoted 0.428001; no combination of the displayed "
                        "constants reproduces it, so the quoted value is carried as an "
                        "unverified ceiling (see BOUND_AUDIT_H41)");
    });

    add("H41_MINOR_IDENTITY", [](const verify_options& opt) {
        rng64 rng = rng64(opt.seed).fork("H41_MINOR_IDENTITY");
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            coeff_vector a;
            auto draw = [&rng]() { return cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)); };
            a.a2 = draw(); a.a3 = draw(); a.a4 = draw();
            a.a5 = draw(); a.a6 = draw(); a.a7 = draw();
            worst = std::max(worst, std::abs(h41(a).value - hankel(4, 1, a).value));
        }
        return row("H41_MINOR_IDENTITY", "0 (cofactor assembly == 4x4 determinant)",
                   "max |difference| over 10000 random coefficient vectors: " + fmt(worst),
                   1e-10, worst <= 1e-10);
    });

    add("LEMMA_KERNEL_EQUALITY", [](const verify_options&) {
        p_vector pv;
        pv.p = {2.0, 2.0, 2.0, 2.0};
        pv.admissible = toeplitz_admissible(pv.p);
        const cplx p1 = pv.at(1), p2 = pv.at(2), p3 = pv.at(3), p4 = pv.at(4);
        const double quartic =
            std::abs(p1 * p1 * p1 * p1 + p2 * p2 - 3.0 * p1 * p1 * p2 + 2.0 * p1 * p3 - p4);
        const double cubic = std::abs(p3 - 2.0 * p1 * p2 + p1 * p1 * p1);
        const bool ok = std::abs(quartic - 2.0) <= tol::algebra &&
                        std::abs(cubic - 2.0) <= tol::algebra &&
                        pv.admissible == verdict::boundary;
        return row("LEMMA_KERNEL_EQUALITY", "both quartic and cubic functionals equal 2 at (2,2,2,2)",
                   "quartic " + fmt(quartic) + ", cubic " + fmt(cubic), tol::algebra, ok);
    });
    add("LEMMA_P1CUBE_ELSEWHERE", [](const verify_options&) {
        p_vector ker;
        ker.p = {2.0, 2.0, 2.0, 2.0};
        ker.admissible = verdict::boundary;
        const cplx p1 = ker.at(1), p2 = ker.at(2), p3 = ker.at(3);
        const double t = 2.0;
        const double lhs = std::abs(t * p1 * p1 * p1 - (t + 1.0) * p1 * p2 + p3);
        return flag("LEMMA_P1CUBE_ELSEWHERE",
                    "|t p1^3 - (t+1) p1 p2 + p3| <= 2|t-1| outside [0,1] (printed)",
                    "half-plane kernel at t = 2: left side " + fmt(lhs) +
                        " exceeds the printed bound 2",
                    tol::derived,
                    "the kernel's left side is |4t-2| at every t, above 2|t-1| everywhere "
                    "outside [0,1]; it matches the product-lemma shape 2|2t-1|, which "
                    "sampling never exceeds, so the printed branch most likely dropped a "
                    "factor of 2. The constant-2 branch on [0,1] -- the only one the "
                    "derivations invoke -- is classical and is what LEMMA_PREDICATES checks");
    });
    add("LEMMA_PREDICATES", [](const verify_options& opt) {
        rng64 rng = rng64(opt.seed).fork("LEMMA_PREDICATES");
        long checks = 0, violations = 0;
        double worst_excess = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const p_vector pv = draw_pv(rng, 4);
            for (const auto& c : check_lemma_inequalities(pv)) {
                ++checks;
                if (!c.holds) {
                    ++violations;
                    worst_excess = std::max(worst_excess, c.lhs - c.bound);
                }
            }
        }
        return row("LEMMA_PREDICATES", "0 violations",
                   std::to_string(violations) + " violations in " + std::to_string(checks) +
                       " predicate evaluations" +
                       (violations ? " (worst excess " + fmt(worst_excess) + ")" : ""),
                   tol::algebra, violations == 0);
    });

    add("MEMBERSHIP_EXTREMALS", [](const verify_options&) {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= 6; ++n) {
            const auto rep = extremal_fn(n, membership_order).check_membership();
            ok &= rep.member;
            if (!rep.member) detail += " extremal(" + std::to_string(n) + ") rejected;";
        }
        truncated_series koebe(default_order);
        for (int k = 1; k <= default_order; ++k) koebe[k] = static_cast<double>(k);
        const auto krep = class_member(koebe).check_membership({0.5, 0.9});
        ok &= !krep.member;
        const auto idrep =
            class_member(truncated_series::monomial(1, 1.0, default_order)).check_membership();
        ok &= idrep.member;
        return row("MEMBERSHIP_EXTREMALS",
                   "extremal(2..6) inside the petal at radii {0.5, 0.9, 0.95}; z/(1-z)^2 outside",
                   ok ? "5 members pass, the starlike-of-order-zero witness fails, identity passes"
                      : "unexpected verdicts:" + detail,
                   tol::audit, ok);
    });

    add("OMEGA1_BOUND", [](const verify_options&) {
        const double v = reference_constants()[0].value;
        return row("OMEGA1_BOUND", "0.820011", fmt(v) + " (from the radical form)", tol::audit,
                   std::abs(v - 0.820011) < 1e-6);
    });
    add("OMEGA2_BOUND", [](const verify_options&) {
        const double v = reference_constants()[1].value;
        return row("OMEGA2_BOUND", "0.360465", fmt(v) + " (from the radical form)", tol::audit,
                   std::abs(v - 0.360465) < 1e-6,
                   "the expansion display carries prefactor 460800 where the bound line and "
                   "the final constant require 3686400; the constant itself is consistent");
    });
    add("OMEGA3_BOUND", [](const verify_options&) {
        const double v = reference_constants()[2].value;
        return row("OMEGA3_BOUND", "0.606922", fmt(v) + " (from the radical form)", tol::audit,
                   std::abs(v - 0.606922) < 1e-6);
    });

    add("P234_EXPANSION", [](const verify_options& opt) {
        rng64 rng = rng64(opt.seed).fork("P234_EXPANSION");
        long bad = 0;
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            caratheodory_params q;
            q.p1 = rng.uniform(0.0, 2.0);
            const double two_pi = 6.283185307179586476925286766559;
            q.gamma = std::polar(rng.uniform(), rng.uniform(0.0, two_pi));
            q.eta = std::polar(rng.uniform(), rng.uniform(0.0, two_pi));
            q.rho = std::polar(rng.uniform(), rng.uniform(0.0, two_pi));
            const auto p234 = expand_p234(q);
            const std::vector<cplx> p = {q.p1, p234[0], p234[1], p234[2]};
            const double mineig = toeplitz_min_eigenvalue(p);
            worst = std::min(worst, mineig);
            if (mineig < -tol::eig_band) ++bad;
        }
        return row("P234_EXPANSION", "every expansion is Toeplitz-admissible",
                   std::to_string(bad) + " inadmissible in 10000 draws (worst eigenvalue " +
                       fmt(worst) + ")",
                   tol::eig_band, bad == 0);
    });

    add("QUAD_MAX_RATIONAL", [](const verify_options&) {
        const auto q = quad_max<rational>(rational(-17, 144), rational(11, 12), rational(0));
        const bool ok = q.max == rational(121, 68) && q.argmax == rational(66, 17);
        return row("QUAD_MAX_RATIONAL", "121/68 at t = 66/17",
                   std::to_string(static_cast<long long>(q.max.numerator())) + "/" +
                       std::to_string(static_cast<long long>(q.max.denominator())) + " at t = " +
                       std::to_string(static_cast<long long>(q.argmax.numerator())) + "/" +
                       std::to_string(static_cast<long long>(q.argmax.denominator())),
                   0.0, ok, "interior vertex case of the [0,4] quadratic maximum");
    });

    auto sharp_row = [](const verify_options& opt, const std::string& id, const std::string& name,
                        double bound, const std::string& refs,
                        std::function<double(const coeff_vector&)> f) {
        const auto rep = witness_search(name, f, bound, opt.budget, opt.seed);
        return row(id, refs, "best witness " + fmt(rep.best_value), tol::witness,
                   rep.best_value >= bound - tol::witness && !rep.violation);
    };
    add("SHARPNESS_A2", [sharp_row](const verify_options& o) {
        return sharp_row(o, "SHARPNESS_A2", "a2", 1.0, "|a2| reaches 1",
                         [](const coeff_vector& a) { return std::abs(a.a2); });
    });
    add("SHARPNESS_A3", [sharp_row](const verify_options& o) {
        return sharp_row(o, "SHARPNESS_A3", "a3", 0.5, "|a3| reaches 1/2",
                         [](const coeff_vector& a) { return std::abs(a.a3); });
    });
    add("SHARPNESS_A4", [sharp_row](const verify_options& o) {
        return sharp_row(o, "SHARPNESS_A4", "a4", 1.0 / 3.0, "|a4| reaches 1/3",
                         [](const coeff_vector& a) { return std::abs(a.a4); });
    });
    add("SHARPNESS_H22", [sharp_row](const verify_options& o) {
        return sharp_row(o, "SHARPNESS_H22", "h22", 0.25, "|H_{2,2}| reaches 1/4",
                         [](const coeff_vector& a) { return h22(a).abs; });
    });
    add("SHARPNESS_H31", [sharp_row](const verify_options& o) {
        return sharp_row(o, "SHARPNESS_H31", "h31", 1.0 / 9.0, "|H_{3,1}| reaches 1/9",
                         [](const coeff_vector& a) { return h31(a).abs; });
    });

    add("TOEPLITZ_REFERENCE_VALUES", [](const verify_options&) {
        struct ref_case {
            std::vector<cplx> p;
            double mineig;
        };
        const std::vector<ref_case> cases = {
            {{2.0, 2.0, 2.0, 2.0}, 0.0},
            {{0.0, 0.0, 0.0, 0.0}, 2.0},
            {{1.0, 0.5, 0.25, 0.125}, 0.720458388235},
            {{2.0, cplx(-0.333333, 1.45521), -2.0, 2.0}, -4.064369360274},
        };
        double worst = 0.0;
        for (const auto& c : cases)
            worst = std::max(worst, std::abs(toeplitz_min_eigenvalue(c.p) - c.mineig));
        const auto atoms = herglotz_atoms({0.5, 0.5}, {0.7, 2.1}, 6);
        worst = std::max(worst, std::abs(toeplitz_min_eigenvalue(atoms.p)));
        return row("TOEPLITZ_REFERENCE_VALUES", "five pinned minimum eigenvalues",
                   "max |deviation| " + fmt(worst), tol::derived, worst <= tol::derived);
    });

    return reg;
}

inline verify_report run_verify(const verify_options& opt) {
    verify_report rep;
    rep.seed = opt.seed;

    auto reg = claim_registry();
    std::sort(reg.begin(), reg.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // case-insensitive substring filter
    auto matches = [&opt](const std::string& id) {
        if (opt.claim_filter.empty()) return true;
        auto lower = [](std::string s) {
            for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            return s;
        };
        return lower(id).find(lower(opt.claim_filter)) != std::string::npos;
    };
    std::vector<std::size_t> sel;
    for (std::size_t i = 0; i < reg.size(); ++i)
        if (matches(reg[i].first)) sel.push_back(i);

    rep.claims.resize(sel.size());
    auto run_one = [&](std::size_t k) {
        const auto& [id, fn] = reg[sel[k]];
        try {
            rep.claims[k] = fn(opt);
        } catch (const std::exception& e) {
            rep.claims[k] = {id, "", "", 0.0, "FAIL", std::string("exception: ") + e.what()};
        }
    };

    const int nthreads = std::max(1, opt.threads);
    if (nthreads == 1 || sel.size() < 2) {
        for (std::size_t k = 0; k < sel.size(); ++k) run_one(k);
    } else {
        // claims are independent and own their rng streams, so any schedule
        // produces the same rows; slots fix the output order
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const int use = std::min<int>(nthreads, static_cast<int>(sel.size()));
        pool.reserve(static_cast<std::size_t>(use));
        for (int t = 0; t < use; ++t)
            pool.emplace_back([&] {
                for (std::size_t k; (k = next.fetch_add(1)) < sel.size();) run_one(k);
            });
        for (auto& th : pool) th.join();
    }
    return rep;
}

inline std::string report_to_json(const verify_report& rep,
                                  std::optional<long long> elapsed_ms = std::nullopt) {
    nlohmann::ordered_json j;
    j["version"] = rep.version;
    j["seed"] = rep.seed;
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : rep.claims) {
        nlohmann::ordered_json r;
        r["id"] = c.id;
        r["reference"] = c.reference;
        r["computed"] = c.computed;
        r["tol"] = c.tol;
        r["status"] = c.status;
        r["note"] = c.note;
        j["claims"].push_back(std::move(r));
    }
    if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
    return j.dump(2) + "\n";
}

inline std::string report_to_markdown(const verify_report& rep,
                                      std::optional<long long> elapsed_ms = std::nullopt) {
    std::string out;
    out += "# Verification report\n\n";
    out += "seed: " + std::to_string(rep.seed) + "  \nversion: " + rep.version + "\n\n";
    out += "| claim | reference | computed | tol | status | note |\n";
    out += "|---|---|---|---|---|---|\n";
    auto esc = [](std::string s) {
        std::string r;
        for (char c : s) {
            if (c == '|') r += "\\|";
            else r += c;
        }
        return r;
    };
    for (const auto& c : rep.claims)
        out += "| " + esc(c.id) + " | " + esc(c.reference) + " | " + esc(c.computed) + " | " +
               detail::fmt(c.tol) + " | " + c.status + " | " + esc(c.note) + " |\n";
    if (elapsed_ms) out += "\nelapsed: " + std::to_string(*elapsed_ms) + " ms\n";
    return out;
}

} // namespace petal
