#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "petal/caratheodory.hpp"
#include "petal/coefficients.hpp"
#include "petal/constants.hpp"
#include "petal/errors.hpp"
#include "petal/rng.hpp"

namespace petal {

using rational = boost::rational<long long>;

// ---------------------------------------------------------------------------
// max of A t^2 + B t + C over t in [0,4], by the standard three-case split:
//   C             when B <= 0 and A <= -B/4          (max at t = 0)
//   16A + 4B + C  when B >= 0, A >= -B/8  or  B <= 0, A >= -B/4   (t = 4)
//   (4AC - B^2)/(4A)  when B > 0 and A <= -B/8       (interior vertex)
// The cases tile the (A,B) plane; values agree on the seams.
// ---------------------------------------------------------------------------
template <class T>
struct quad_result {
    T max;
    T argmax;
};

template <class T>
quad_result<T> quad_max(T A, T B, T C) {
    const T zero(0);
    if (B <= zero && 4 * A <= -B) return {C, zero};
    if ((B >= zero && 8 * A >= -B) || (B <= zero && 4 * A >= -B))
        return {16 * A + 4 * B + C, T(4)};
    // B > 0, A <= -B/8 (so A < 0): vertex inside [0,4]
    return {(4 * A * C - B * B) / (4 * A), -B / (2 * A)};
}

// (1/8)(8/3 + max_t(-17/144 t^2 + 11/12 t)) carried out in exact
// arithmetic; the chain closes at 907/1632.
inline rational a5_decomposition_bound() {
    const auto q = quad_max<rational>(rational(-17, 144), rational(11, 12), rational(0));
    return (rational(8, 3) + q.max) / 8;
}

// ---------------------------------------------------------------------------
// The cuboid objective M(p,x,y) dominating 82944 |H_{3,1}|, assembled from
// m1..m4 exactly as displayed:
//   M = (m1 + m2 y + m3 y^2 + m4 (1 - y^2)) / 82944
// on U = [0,2] x [0,1] x [0,1].
// ---------------------------------------------------------------------------
inline double eval_M(double p, double x, double y) {
    if (p < -tol::algebra || p > 2.0 + tol::algebra || x < -tol::algebra ||
        x > 1.0 + tol::algebra || y < -tol::algebra || y > 1.0 + tol::algebra)
        throw domain_violation("eval_M: (p,x,y) outside [0,2]x[0,1]x[0,1]");
    const double p2 = p * p, p4 = p2 * p2, p6 = p4 * p2;
    const double u = 4.0 - p2;
    const double x2 = x * x, x3 = x2 * x, x4 = x3 * x;
    const double m1 = 25.0 * p6 + 135.0 * x3 * p2 * u * u + 18.0 * x4 * p2 * u * u
                    + 324.0 * x3 * u * u + 72.0 * x * p4 * u + 648.0 * x2 * p2 * u
                    + 42.0 * x2 * p4 * u + 162.0 * x3 * p4 * u;
    const double m2 = 24.0 * (1.0 - x2) * u * (10.0 * p2 * p + 27.0 * p2 * p * x + u * (18.0 * p * x + 3.0 * p * x2));
    const double m3 = 72.0 * (1.0 - x2) * u * ((8.0 + x2) * u + 9.0 * p2 * x);
    const double m4 = 648.0 * (1.0 - x2) * u * (p2 + x * u);
    return (m1 + m2 * y + m3 * y * y + m4 * (1.0 - y * y)) / 82944.0;
}

// ---------------------------------------------------------------------------
// Companion objective dominating 82944 |H_{2,3}| on the same cuboid, built
// the same way: substitute the p2/p3/p4 closed forms into a3 a5 - a4^2,
// collect by powers of gamma and by eta-blocks {1, eta, eta^2, (1-|eta|^2)rho},
// then apply the triangle inequality with |gamma| = x, |eta| = y and the
// gamma-power coefficients taken in absolute value pointwise in p.
// Its cuboid maximum is 1/9 at (0,0,1).
// ---------------------------------------------------------------------------
inline double eval_M23(double p, double x, double y) {
    if (p < -tol::algebra || p > 2.0 + tol::algebra || x < -tol::algebra ||
        x > 1.0 + tol::algebra || y < -tol::algebra || y > 1.0 + tol::algebra)
        throw domain_violation("eval_M23: (p,x,y) outside [0,2]x[0,1]x[0,1]");
    const double p2 = p * p, p3 = p2 * p, p4 = p2 * p2, p6 = p4 * p2;
    const double u = 4.0 - p2;
    const double x2 = x * x;
    // sum_k |c_k(p)| x^k over the gamma-degrees of the eta-free block
    const double s0 = std::abs(-25.0 * p6)
                    + std::abs(72.0 * p6 - 288.0 * p4) * x
                    + std::abs(-42.0 * p6 + 816.0 * p4 - 2592.0 * p2) * x2
                    + std::abs(-27.0 * p6 - 108.0 * p4 - 432.0 * p2 + 5184.0) * x2 * x
                    + std::abs(18.0 * p6 - 144.0 * p4 + 288.0 * p2) * x2 * x2;
    // eta-linear block (carries one factor (1-|gamma|^2) u)
    const double s1 = std::abs(240.0 * p3)
                    + std::abs(-216.0 * p3 - 1728.0 * p) * x
                    + std::abs(72.0 * p3 - 288.0 * p) * x2;
    // eta^2 block and the rotation block
    const double b2 = 576.0 * u * (1.0 - x2) + 648.0 * x * (p2 + x * u);
    const double b3 = 648.0 * (p2 + x * u);
    return (s0 + y * (1.0 - x2) * u * s1 + y * y * (1.0 - x2) * u * b2
            + (1.0 - y * y) * (1.0 - x2) * u * b3) / 82944.0;
}

// ---------------------------------------------------------------------------
// Grid + refinement maximizer over the closed cuboid U, with an explicit
// boundary pass. "Certified by sampling": the result carries its resolution
// so downstream consumers can judge the confidence; no interval arithmetic.
// ---------------------------------------------------------------------------
struct region_result {
    std::string label;
    double max_value;
    std::array<double, 3> argmax;
};

struct cuboid_result {
    double max_value = 0.0;
    std::array<double, 3> argmax{};
    int grid_resolution = 0;
    double refinement_tolerance = 0.0;
    std::vector<region_result> face_edge_table;
    std::vector<std::array<double, 3>> interior_critical_points;
};

namespace detail {

// value-then-lexicographic comparison: a deterministic, associative "better
// than" for max-reductions, independent of evaluation order.
inline bool better(double v1, const std::array<double, 3>& q1, double v2,
                   const std::array<double, 3>& q2) {
    if (v1 != v2) return v1 > v2;
    return q1 < q2;
}

template <class F>
std::array<double, 3> coordinate_descent(F&& obj, std::array<double, 3> q, double step,
                                         double tolstep) {
    static constexpr std::array<double, 3> lo{0.0, 0.0, 0.0};
    static constexpr std::array<double, 3> hi{2.0, 1.0, 1.0};
    double best = obj(q[0], q[1], q[2]);
    while (step > tolstep) {
        bool improved = false;
        for (int axis = 0; axis < 3; ++axis) {
            for (double sgn : {-1.0, 1.0}) {
                auto trial = q;
                trial[axis] = std::clamp(trial[axis] + sgn * step, lo[axis], hi[axis]);
                const double v = obj(trial[0], trial[1], trial[2]);
                if (better(v, trial, best, q)) {
                    best = v;
                    q = trial;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return q;
}

template <class F>
double grad_norm(F&& obj, const std::array<double, 3>& q) {
    const double h = 1e-6;
    double acc = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
        auto a = q, b = q;
        a[axis] += h;
        b[axis] -= h;
        const double d = (obj(a[0], a[1], a[2]) - obj(b[0], b[1], b[2])) / (2.0 * h);
        acc += d * d;
    }
    return std::sqrt(acc);
}

} // namespace detail

template <class F>
cuboid_result cuboid_max(F&& obj, int resolution = 201, double refinement_tol = 1e-10) {
    if (resolution < 2) throw domain_violation("cuboid_max: resolution must be at least 2");
    cuboid_result res;
    res.grid_resolution = resolution;
    res.refinement_tolerance = refinement_tol;

    const int n = resolution;
    auto coord = [n](int i, double hi) { return hi * i / (n - 1); };

    // dense scan, retaining the best K cells as refinement seeds
    constexpr int K = 20;
    std::vector<std::pair<double, std::array<double, 3>>> top;
    top.reserve(K + 1);
    for (int i = 0; i < n; ++i) {
        const double p = coord(i, 2.0);
        for (int j = 0; j < n; ++j) {
            const double x = coord(j, 1.0);
            for (int k = 0; k < n; ++k) {
                const double y = coord(k, 1.0);
                const double v = obj(p, x, y);
                if (static_cast<int>(top.size()) < K || v > top.back().first) {
                    std::array<double, 3> q{p, x, y};
                    auto it = std::lower_bound(
                        top.begin(), top.end(), v,
                        [](const auto& e, double val) { return e.first > val; });
                    top.insert(it, {v, q});
                    if (static_cast<int>(top.size()) > K) top.pop_back();
                }
            }
        }
    }

    double best = top.front().first;
    std::array<double, 3> argbest = top.front().second;

    // refinement from each seed; collect interior near-critical endpoints
    const double cell = 2.0 / (n - 1);
    for (const auto& [v0, q0] : top) {
        const auto q = detail::coordinate_descent(obj, q0, cell, refinement_tol);
        const double v = obj(q[0], q[1], q[2]);
        if (detail::better(v, q, best, argbest)) {
            best = v;
            argbest = q;
        }
        const bool interior = q[0] > 1e-6 && q[0] < 2.0 - 1e-6 && q[1] > 1e-6 &&
                              q[1] < 1.0 - 1e-6 && q[2] > 1e-6 && q[2] < 1.0 - 1e-6;
        if (interior && detail::grad_norm(obj, q) < tol::grad_zero) {
            bool dup = false;
            for (const auto& c : res.interior_critical_points)
                dup |= std::abs(c[0] - q[0]) < 1e-6 && std::abs(c[1] - q[1]) < 1e-6 &&
                       std::abs(c[2] - q[2]) < 1e-6;
            if (!dup) res.interior_critical_points.push_back(q);
        }
    }

    // boundary pass at 10x resolution: 6 faces, 12 edges
    const int m = 10 * resolution;
    auto scan_face = [&](const std::string& label, auto&& embed) {
        double fv = -1.0;
        std::array<double, 3> fq{};
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const auto q = embed(static_cast<double>(i) / (m - 1),
                                     static_cast<double>(j) / (m - 1));
                const double v = obj(q[0], q[1], q[2]);
                if (detail::better(v, q, fv, fq)) {
                    fv = v;
                    fq = q;
                }
            }
        res.face_edge_table.push_back({label, fv, fq});
        if (detail::better(fv, fq, best, argbest)) {
            best = fv;
            argbest = fq;
        }
    };
    auto scan_edge = [&](const std::string& label, auto&& embed) {
        double ev = -1.0;
        std::array<double, 3> eq{};
        for (int i = 0; i < m; ++i) {
            const auto q = embed(static_cast<double>(i) / (m - 1));
            const double v = obj(q[0], q[1], q[2]);
            if (detail::better(v, q, ev, eq)) {
                ev = v;
                eq = q;
            }
        }
        res.face_edge_table.push_back({label, ev, eq});
        if (detail::better(ev, eq, best, argbest)) {
            best = ev;
            argbest = eq;
        }
    };

    scan_face("p=0", [](double s, double t) { return std::array<double, 3>{0.0, s, t}; });
    scan_face("p=2", [](double s, double t) { return std::array<double, 3>{2.0, s, t}; });
    scan_face("x=0", [](double s, double t) { return std::array<double, 3>{2.0 * s, 0.0, t}; });
    scan_face("x=1", [](double s, double t) { return std::array<double, 3>{2.0 * s, 1.0, t}; });
    scan_face("y=0", [](double s, double t) { return std::array<double, 3>{2.0 * s, t, 0.0}; });
    scan_face("y=1", [](double s, double t) { return std::array<double, 3>{2.0 * s, t, 1.0}; });
    for (double pv : {0.0, 2.0})
        for (double xv : {0.0, 1.0})
            scan_edge("p=" + std::to_string(static_cast<int>(pv)) + ",x=" + std::to_string(static_cast<int>(xv)),
                      [pv, xv](double t) { return std::array<double, 3>{pv, xv, t}; });
    for (double pv : {0.0, 2.0})
        for (double yv : {0.0, 1.0})
            scan_edge("p=" + std::to_string(static_cast<int>(pv)) + ",y=" + std::to_string(static_cast<int>(yv)),
                      [pv, yv](double t) { return std::array<double, 3>{pv, t, yv}; });
    for (double xv : {0.0, 1.0})
        for (double yv : {0.0, 1.0})
            scan_edge("x=" + std::to_string(static_cast<int>(xv)) + ",y=" + std::to_string(static_cast<int>(yv)),
                      [xv, yv](double t) { return std::array<double, 3>{2.0 * t, xv, yv}; });

    res.max_value = best;
    res.argmax = argbest;
    return res;
}

// ---------------------------------------------------------------------------
// Real roots of sum c_k t^k inside (lo, hi): sign-change bisection on a fine
// grid, then Newton polish. Multiplicities collapse to one root each.
// ---------------------------------------------------------------------------
inline double poly_eval(const std::vector<double>& c, double t) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
}

inline std::vector<double> poly_roots(const std::vector<double>& c, double lo, double hi) {
    if (c.size() < 2) return {};
    std::vector<double> dc(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) dc[k - 1] = c[k] * static_cast<double>(k);

    constexpr int cells = 8192;
    std::vector<double> roots;
    double prev_t = lo, prev_v = poly_eval(c, lo);
    for (int i = 1; i <= cells; ++i) {
        const double t = lo + (hi - lo) * i / cells;
        const double v = poly_eval(c, t);
        if (prev_v == 0.0 && prev_t > lo) {
            roots.push_back(prev_t);
        } else if (prev_v * v < 0.0) {
            double a = prev_t, b = t;
            for (int iter = 0; iter < 200; ++iter) {
                const double mid = 0.5 * (a + b);
                const double vm = poly_eval(c, mid);
                if (vm == 0.0) {
                    a = b = mid;
                    break;
                }
                (vm * poly_eval(c, a) < 0.0 ? b : a) = mid;
                if (b - a < tol::root) break;
            }
            double r = 0.5 * (a + b);
            for (int iter = 0; iter < 8; ++iter) {  // Newton polish
                const double d = poly_eval(dc, r);
                if (d == 0.0) break;
                const double step = poly_eval(c, r) / d;
                const double next = r - step;
                if (next <= lo || next >= hi) break;
                r = next;
                if (std::abs(step) < tol::root * 1e-2) break;
            }
            roots.push_back(r);
        }
        prev_t = t;
        prev_v = v;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// The face/edge helpers of the cuboid analysis, exposed exactly as displayed.
// Four of them (n1, r2, r4, r5) differ from the restriction of M by known
// polynomial amounts; restriction_gap() documents the differences, and the
// verify layer reports them. The stated maxima below refer to the helpers as
// displayed.
// ---------------------------------------------------------------------------
struct edge_fn {
    std::string name;
    std::function<double(double)> f;
    double lo, hi;
};

struct face_fn {
    std::string name;
    std::function<double(double, double)> f;
};

struct proof_regions {
    std::vector<face_fn> faces;
    std::vector<edge_fn> edges;
};

inline proof_regions edge_functions() {
    proof_regions r;
    r.faces.push_back({"n1", [](double x, double y) {
        return (1.0 - x * x) * ((8.0 + x * x) * y * y + 9.0 * x * (1.0 - y * y)) / 72.0;
    }});
    r.faces.push_back({"n2", [](double p, double y) {
        const double u = 4.0 - p * p;
        return (25.0 * std::pow(p, 6)
                + u * (240.0 * p * p * p * y + 576.0 * u * y * y + 648.0 * p * p * (1.0 - y * y)))
               / 82944.0;
    }});
    r.faces.push_back({"n3", [](double p, double) {
        return (2592.0 + 1224.0 * p * p - 222.0 * std::pow(p, 4) - 49.0 * std::pow(p, 6)) / 41472.0;
    }});
    r.faces.push_back({"n4", [](double p, double x) {
        const double p2 = p * p, p4 = p2 * p2, p6 = p4 * p2;
        const double x2 = x * x, x3 = x2 * x, x4 = x3 * x;
        return (p6 * (25.0 - 42.0 * x2 - 27.0 * x3 + 18.0 * x4)
                - 288.0 * (-36.0 * x + 18.0 * x3 - x * p4)
                - 12.0 * p4 * (54.0 - 54.0 * x - 14.0 * x2 + 63.0 * x3 + 12.0 * x4)
                + 72.0 * p2 * (36.0 - 72.0 * x + 66.0 * x3 + 4.0 * x4 - x * p4)) / 82944.0;
    }});
    r.faces.push_back({"n5", [](double p, double x) {
        const double p2 = p * p, p3 = p2 * p, p4 = p2 * p2, p6 = p4 * p2;
        const double u = 4.0 - p2;
        const double x2 = x * x, x3 = x2 * x, x4 = x3 * x;
        return (25.0 * p6
                + u * (72.0 * p4 * x + 648.0 * p2 * x2 + 42.0 * p4 * x2 + 162.0 * p4 * x3
                       + 18.0 * p2 * u * x4
                       + 72.0 * (1.0 - x2) * (9.0 * p2 * x + u * (8.0 + x2))
                       + 135.0 * p2 * u * x3 + 324.0 * u * x3
                       + 288.0 * p * x * (1.0 - x2) * (6.0 + x)
                       + 24.0 * p3 * (1.0 - x2) * (10.0 + 9.0 * x - 3.0 * x2))) / 82944.0;
    }});
    r.edges.push_back({"r1", [](double p) {
        return (25.0 * std::pow(p, 6) + 2592.0 * p * p - 648.0 * std::pow(p, 4)) / 82944.0;
    }, 0.0, 2.0});
    r.edges.push_back({"r2", [](double p) {
        return (9216.0 - 4608.0 * p * p + 3168.0 * std::pow(p, 4) - 623.0 * std::pow(p, 6)) / 82944.0;
    }, 0.0, 2.0});
    r.edges.push_back({"r3", [](double p) {
        return (2592.0 + 1224.0 * p * p - 222.0 * std::pow(p, 4) - 49.0 * std::pow(p, 6)) / 41472.0;
    }, 0.0, 2.0});
    r.edges.push_back({"r4", [](double x) {
        return (8.0 - 7.0 * x * x - x * x * x * x) / 72.0;
    }, 0.0, 1.0});
    r.edges.push_back({"r5", [](double x) { return x * (1.0 - x * x) / 8.0; }, 0.0, 1.0});
    return r;
}

// max of one displayed edge helper over its own interval (fine scan + the
// same descent polish used elsewhere).
inline std::pair<double, double> edge_max(const edge_fn& e) {
    double best = -1.0, arg = e.lo;
    constexpr int n = 20001;
    for (int i = 0; i < n; ++i) {
        const double t = e.lo + (e.hi - e.lo) * i / (n - 1);
        const double v = e.f(t);
        if (v > best) {
            best = v;
            arg = t;
        }
    }
    double step = (e.hi - e.lo) / (n - 1);
    while (step > 1e-12) {
        bool improved = false;
        for (double sgn : {-1.0, 1.0}) {
            const double t = std::clamp(arg + sgn * step, e.lo, e.hi);
            const double v = e.f(t);
            if (v > best) {
                best = v;
                arg = t;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    return {best, arg};
}

// Exact gaps between the displayed helpers and the true restriction of M
// (positive means M exceeds the helper at that point).
inline double restriction_gap(const std::string& name, double s, double t) {
    if (name == "n1") return eval_M(0.0, s, t) - edge_functions().faces[0].f(s, t);
    if (name == "r2") return eval_M(s, 0.0, 1.0) - edge_functions().edges[1].f(s);
    if (name == "r4") return eval_M(0.0, s, 1.0) - edge_functions().edges[3].f(s);
    if (name == "r5") return eval_M(0.0, s, 0.0) - edge_functions().edges[4].f(s);
    return 0.0;
}

// ---------------------------------------------------------------------------
// Interior critical-point feasibility: dM/dy = 0 admits a solution y0 in
// (0,1) exactly where
//   p^3 (10 + 9x - 3x^2) + 24 (8 - 9x + x^2) - 6 p^2 x^2 + 12 p x (6 + x)
//     < 6 p^2 (17 - 18x).
// The inequality carves out p in (p0, 2), x in (0, 17/54) with p0 the root
// of 5 p^3 - 51 p^2 + 96 in (0,2).
// ---------------------------------------------------------------------------
inline bool feasible_h1(double p, double x) {
    const double lhs = p * p * p * (10.0 + 9.0 * x - 3.0 * x * x)
                     + 24.0 * (8.0 - 9.0 * x + x * x) - 6.0 * p * p * x * x
                     + 12.0 * p * x * (6.0 + x);
    return lhs < 6.0 * p * p * (17.0 - 18.0 * x);
}

struct feasibility_window {
    double p_low, p_high;
    double x_low, x_high;
};

inline feasibility_window feasibility_scan() {
    feasibility_window w{2.0, 2.0, 0.0, 0.0};
    // p threshold: bisect on the x -> 0 limit of the predicate
    double a = 1.0, b = 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (a + b);
        (feasible_h1(mid, 1e-12) ? b : a) = mid;
    }
    w.p_low = 0.5 * (a + b);
    // x threshold: bisect at the p -> 2 limit
    a = 0.0;
    b = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (a + b);
        (feasible_h1(2.0 - 1e-12, mid) ? a : b) = mid;
    }
    w.x_high = 0.5 * (a + b);
    return w;
}

// ---------------------------------------------------------------------------
// Numerical counterpart of each sharpness claim: maximize |functional| over
// admissible vectors, reporting the best witness found and its gap to the
// claimed bound. Structured starts cover the single-power Schwarz witnesses
// (uniform m-atom configurations give p_j = 2 e^{i j phi} [m | j]); random
// multi-start plus coordinate descent handles the rest.
// ---------------------------------------------------------------------------
struct search_report {
    std::string functional;
    double claimed_bound = 0.0;
    double best_value = 0.0;
    p_vector witness;
    long samples = 0;
    std::uint64_t seed = 0;
    bool violation = false;  // best exceeds the claim beyond tolerance
};

namespace detail {

struct atom_config {
    std::vector<double> lambda, theta;
};

template <class F>
double eval_atoms(F&& functional, const atom_config& cfg, int n = 6) {
    const p_vector pv = herglotz_atoms(cfg.lambda, cfg.theta, n);
    return functional(coeffs_from_p(pv));
}

template <class F>
atom_config polish_atoms(F&& functional, atom_config cfg, double step0) {
    double best = eval_atoms(functional, cfg);
    double step = step0;
    const std::size_t m = cfg.lambda.size();
    while (step > 1e-9) {
        bool improved = false;
        for (std::size_t k = 0; k < m; ++k) {
            for (double sgn : {-1.0, 1.0}) {
                // weights move on the simplex: bump one coordinate, renormalize
                auto trial = cfg;
                trial.lambda[k] = std::max(0.0, trial.lambda[k] + sgn * step);
                double sum = 0.0;
                for (double l : trial.lambda) sum += l;
                if (sum <= 0.0) continue;
                for (double& l : trial.lambda) l /= sum;
                if (const double v = eval_atoms(functional, trial); v > best) {
                    best = v;
                    cfg = trial;
                    improved = true;
                }
            }
            for (double sgn : {-1.0, 1.0}) {
                auto trial = cfg;
                trial.theta[k] += sgn * step;
                if (const double v = eval_atoms(functional, trial); v > best) {
                    best = v;
                    cfg = trial;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return cfg;
}

} // namespace detail

template <class F>
search_report witness_search(const std::string& name, F&& functional, double claimed_bound,
                             long budget, std::uint64_t seed) {
    search_report rep;
    rep.functional = name;
    rep.claimed_bound = claimed_bound;
    rep.seed = seed;
    rng64 rng = rng64(seed).fork("witness:" + name);

    detail::atom_config best_cfg{{1.0}, {0.0}};
    double best = detail::eval_atoms(functional, best_cfg);

    auto consider = [&](const detail::atom_config& cfg) {
        const double v = detail::eval_atoms(functional, cfg);
        ++rep.samples;
        if (v > best) {
            best = v;
            best_cfg = cfg;
        }
    };

    // single-power witnesses: uniform m atoms, common phase swept
    const double two_pi = 6.283185307179586476925286766559;
    for (int m = 1; m <= 6; ++m) {
        for (int s = 0; s < 24; ++s) {
            const double phi = two_pi * s / (24.0 * m);
            detail::atom_config cfg;
            for (int k = 0; k < m; ++k) {
                cfg.lambda.push_back(1.0 / m);
                cfg.theta.push_back(two_pi * k / m + phi);
            }
            consider(cfg);
        }
    }
    // random multi-start
    for (long i = 0; i < budget; ++i) {
        const int m = 1 + static_cast<int>(rng.below(6));
        detail::atom_config cfg;
        double sum = 0.0;
        for (int k = 0; k < m; ++k) {
            const double l = -std::log(1.0 - rng.uniform());
            cfg.lambda.push_back(l);
            sum += l;
            cfg.theta.push_back(rng.uniform(0.0, two_pi));
        }
        for (double& l : cfg.lambda) l /= sum;
        consider(cfg);
    }
    best_cfg = detail::polish_atoms(functional, best_cfg, 0.1);
    best = detail::eval_atoms(functional, best_cfg);

    rep.best_value = best;
    rep.witness = herglotz_atoms(best_cfg.lambda, best_cfg.theta, 6);
    rep.violation = best > claimed_bound + tol::audit;
    return rep;
}

} // namespace petal
