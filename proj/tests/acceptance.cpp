// Acceptance harness: one line per criterion, PASS/FAIL with the measured
// values. Criterion 6 is expected to fail honestly — the fourth-order
// assembly constant cannot be reproduced from its own displayed ingredients
// — so the process exit code is 0 exactly when the failing set is {6}.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "petal/petal_all.hpp"
#include "petal/verify.hpp"

using namespace petal;

namespace {

std::set<int> failed;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("[%s] %d. %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok) failed.insert(criterion);
}

std::string fmt(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.12g", v);
    return b;
}

p_vector draw_pv(rng64& rng, int n) {
    const int m = 1 + static_cast<int>(rng.below(6));
    std::vector<double> lambda(static_cast<std::size_t>(m)), theta(lambda.size());
    double sum = 0.0;
    for (auto& l : lambda) {
        l = -std::log(1.0 - rng.uniform());
        sum += l;
    }
    for (auto& l : lambda) l /= sum;
    for (auto& t : theta) t = rng.uniform(0.0, 6.283185307179586);
    return herglotz_atoms(lambda, theta, n);
}

// ---- criterion 1: closed forms vs series recurrence ------------------------
void criterion_1() {
    rng64 rng = rng64(7).fork("acc:coeffs");
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const auto pv = draw_pv(rng, 6);
        const auto direct = coeffs_from_p(pv);
        const auto via_w = coeffs_from_schwarz(schwarz_from_p(pv));
        for (int k = 2; k <= 7; ++k)
            worst = std::max(worst, std::abs(direct.at(k) - via_w.at(k)));
    }
    report(1, worst <= 1e-10,
           "coefficient consistency: max |closed form - recurrence| = " + fmt(worst) +
               " over 10000 admissible samples (tol 1e-10)");
}

// ---- criterion 2: exact rational landmarks ---------------------------------
void criterion_2() {
    const auto q = quad_max<rational>(rational(-17, 144), rational(11, 12), rational(0));
    const rational a5 = a5_decomposition_bound();
    const bool ok = q.max == rational(121, 68) && a5 == rational(907, 1632);
    report(2, ok,
           "rational landmarks: quad_max = " + std::to_string((long long)q.max.numerator()) +
               "/" + std::to_string((long long)q.max.denominator()) +
               " (want 121/68), fifth-coefficient bound = " +
               std::to_string((long long)a5.numerator()) + "/" +
               std::to_string((long long)a5.denominator()) + " (want 907/1632)");
}

// ---- criterion 3: cuboid maximum of the third-order surface ----------------
void criterion_3() {
    const auto r = cuboid_max([](double p, double x, double y) { return eval_M(p, x, y); }, 201);
    const double ref = 1.0 / 9.0;
    const bool ok = r.max_value <= ref + 1e-4 && r.max_value >= ref - 1e-6 &&
                    std::abs(r.argmax[0]) <= 1e-3 && std::abs(r.argmax[1]) <= 1e-3 &&
                    std::abs(r.argmax[2] - 1.0) <= 1e-3 && r.interior_critical_points.empty();
    report(3, ok,
           "cuboid maximum: " + fmt(r.max_value) + " at (" + fmt(r.argmax[0]) + ", " +
               fmt(r.argmax[1]) + ", " + fmt(r.argmax[2]) + "), interior critical points: " +
               std::to_string(r.interior_critical_points.size()) + " (want 1/9 at (0,0,1), none)");
}

// ---- criterion 4: face/edge constants and the stationary root --------------
void criterion_4() {
    bool ok = true;
    std::string detail = "face/edge landmarks:";

    double lo = 1e9, hi = -1e9;
    for (int i = 0; i <= 200; ++i)
        for (int j = 0; j <= 200; ++j) {
            const double v = eval_M(2.0, i / 200.0, j / 200.0);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    ok &= std::abs(lo - 25.0 / 1296.0) < 1e-4 && std::abs(hi - 25.0 / 1296.0) < 1e-4;
    detail += " M(2,.,.)=" + fmt(hi);

    const auto pr = edge_functions();
    const auto [v1, t1] = edge_max(pr.edges[0]);
    ok &= std::abs(v1 - 0.0342145) < 1e-4 && std::abs(t1 - 1.51933) < 1e-3;
    detail += ", r1max=" + fmt(v1) + "@" + fmt(t1);
    const auto [v3, t3] = edge_max(pr.edges[2]);
    ok &= std::abs(v3 - 0.0914236) < 1e-4 && std::abs(t3 - 1.32162) < 1e-3;
    detail += ", r3max=" + fmt(v3) + "@" + fmt(t3);
    const auto [v5, t5] = edge_max(pr.edges[4]);
    ok &= std::abs(v5 - 0.0481125) < 1e-4 && std::abs(t5 - 1.0 / std::sqrt(3.0)) < 1e-3;
    detail += ", r5max=" + fmt(v5) + "@" + fmt(t5);

    double flo = 1e9, fhi = -1e9;
    for (int i = 0; i <= 400; ++i) {
        const double v = eval_M(0.0, 1.0, i / 400.0);
        flo = std::min(flo, v);
        fhi = std::max(fhi, v);
    }
    ok &= std::abs(flo - 0.0625) < 1e-4 && std::abs(fhi - 0.0625) < 1e-4;
    detail += ", M(0,1,.)=" + fmt(fhi);

    const std::vector<double> c = {0.0,      294912.0, 0.0, -460800.0, 0.0,
                                   239904.0, 0.0,      -44816.0, 0.0, 1275.0};
    const auto roots = poly_roots(c, 0.05, 2.0);
    const double r0 = roots.size() == 1 ? roots[0] : -1.0;
    ok &= std::abs(r0 - 1.20623) <= 1e-4;
    detail += ", stationary root=" + fmt(r0);

    report(4, ok, detail);
}

// ---- criterion 5: extremal reproductions -----------------------------------
void criterion_5() {
    const auto f2 = extremal_fn(2);
    const auto f3 = extremal_fn(3);
    bool ok = true;
    ok &= std::abs(h22(f2.coefficients()).value - cplx(-0.25)) <= 1e-12;
    ok &= std::abs(h31(f3.coefficients()).value - cplx(-1.0 / 9.0)) <= 1e-12;
    ok &= std::abs(fekete_szego(f2.coefficients(), 1.0).value - cplx(0.5)) <= 1e-12;
    const double t2[4] = {0.0, 0.5, 0.0, 0.125};
    for (int k = 2; k <= 5; ++k) ok &= std::abs(f2.coeff(k) - cplx(t2[k - 2])) <= 1e-12;
    const double t3[6] = {0.0, 0.0, 1.0 / 3.0, 0.0, 0.0, 1.0 / 18.0};
    for (int k = 2; k <= 7; ++k) ok &= std::abs(f3.coeff(k) - cplx(t3[k - 2])) <= 1e-12;
    report(5, ok,
           "extremal values: h22(f2) = " + fmt(h22(f2.coefficients()).value.real()) +
               ", h31(f3) = " + fmt(h31(f3.coefficients()).value.real()) +
               ", fekete_szego(f2,1) = " + fmt(fekete_szego(f2.coefficients(), 1.0).value.real()) +
               ", coefficient tables exact to 1e-12");
}

// ---- criterion 6: closed-form constants and the assembly -------------------
void criterion_6() {
    const auto cs = reference_constants();
    auto get = [&cs](const std::string& n) {
        for (const auto& c : cs)
            if (c.name == n) return c.value;
        return 0.0;
    };
    bool consts_ok = true;
    consts_ok &= std::abs(get("omega1_bound") - 0.820011) < 1e-6;
    consts_ok &= std::abs(get("omega2_bound") - 0.360465) < 1e-6;
    consts_ok &= std::abs(get("omega3_bound") - 0.606922) < 1e-6;
    consts_ok &= get("a6_bound") == 146.0 / 225.0;
    consts_ok &= std::abs(get("a7_chain_total") - 0.863931) < 1e-6;

    // assembly with the displayed ingredient bounds
    const double assembled = get("a7_chain_total") * (1.0 / 9.0) +
                             get("a6_bound") * get("omega1_bound") +
                             get("a5_bound") * get("omega2_bound") +
                             (1.0 / 3.0) * get("omega3_bound");
    const bool assembly_ok = assembled <= 0.428001 + 1e-6;

    // the statement/proof mismatch must surface as FLAG in the report
    verify_options vo;
    vo.claim_filter = "A7_STATEMENT_MISMATCH";
    const auto rep = run_verify(vo);
    const bool flagged = rep.claims.size() == 1 && rep.claims[0].status == "FLAG";

    report(6, consts_ok && assembly_ok && flagged,
           "closed-form constants reproduce to 1e-6 (omega1 " + fmt(get("omega1_bound")) +
               ", omega2 " + fmt(get("omega2_bound")) + ", omega3 " + fmt(get("omega3_bound")) +
               ", a6 " + fmt(get("a6_bound")) + ", a7 chain " + fmt(get("a7_chain_total")) +
               "); a7 mismatch FLAGged: " + (flagged ? "yes" : "NO") +
               "; fourth-order assembly = " + fmt(assembled) +
               " vs quoted 0.428001 -- substituting the displayed ingredient bounds " +
               "overshoots the quoted constant by a factor of ~2.4, and no combination " +
               "of the displayed constants reproduces it (see H41_ASSEMBLY_CONSTANT)");
}

// ---- criterion 7: bound audit + witness attainment -------------------------
void criterion_7() {
    struct bound_spec {
        const char* name;
        double bound;
        std::function<double(const coeff_vector&)> f;
    };
    const std::vector<bound_spec> bounds = {
        {"a2", 1.0, [](const coeff_vector& a) { return std::abs(a.a2); }},
        {"a3", 0.5, [](const coeff_vector& a) { return std::abs(a.a3); }},
        {"a4", 1.0 / 3.0, [](const coeff_vector& a) { return std::abs(a.a4); }},
        {"h22", 0.25, [](const coeff_vector& a) { return h22(a).abs; }},
        {"h31", 1.0 / 9.0, [](const coeff_vector& a) { return h31(a).abs; }},
        {"h23", 0.146048, [](const coeff_vector& a) { return h23(a).abs; }},
        {"h41", 0.428001, [](const coeff_vector& a) { return h41(a).abs; }},
    };
    rng64 rng = rng64(7).fork("acc:audit");
    bool audit_ok = true;
    std::string worst_name;
    double worst_margin = 1e9;
    for (int i = 0; i < 100000; ++i) {
        const auto a = coeffs_from_p(draw_pv(rng, 6));
        for (const auto& b : bounds) {
            const double v = b.f(a);
            if (v > b.bound + 1e-6) audit_ok = false;
            if (b.bound - v < worst_margin) {
                worst_margin = b.bound - v;
                worst_name = b.name;
            }
        }
    }

    bool witness_ok = true;
    std::string gaps;
    const std::array<std::pair<const char*, double>, 5> targets = {
        {{"a2", 1.0}, {"a3", 0.5}, {"a4", 1.0 / 3.0}, {"h22", 0.25}, {"h31", 1.0 / 9.0}}};
    for (const auto& [name, bound] : targets) {
        const std::string nm = name;
        auto f = [&nm](const coeff_vector& a) -> double {
            if (nm == "a2") return std::abs(a.a2);
            if (nm == "a3") return std::abs(a.a3);
            if (nm == "a4") return std::abs(a.a4);
            if (nm == "h22") return h22(a).abs;
            return h31(a).abs;
        };
        const auto rep = witness_search(nm, f, bound, 20000, 7);
        witness_ok &= rep.best_value >= bound - 1e-3;
        gaps += std::string(" ") + name + ":" + fmt(bound - rep.best_value);
    }

    report(7, audit_ok && witness_ok,
           "bound audit over 100000 samples: " + std::string(audit_ok ? "no" : "SOME") +
               " violations (tightest margin " + fmt(worst_margin) + " on " + worst_name +
               "); witness gaps" + gaps + " (all within 1e-3)");
}

// ---- criterion 8: lemma predicates -----------------------------------------
void criterion_8() {
    rng64 rng = rng64(7).fork("acc:lemmas");
    long checks = 0, violations = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto pv = draw_pv(rng, 4);
        for (const auto& c : check_lemma_inequalities(pv)) {
            ++checks;
            if (!c.holds) ++violations;
        }
    }
    p_vector ker;
    ker.p = {2.0, 2.0, 2.0, 2.0};
    ker.admissible = verdict::boundary;
    const auto kchecks = check_lemma_inequalities(ker);
    const bool kernel_eq = std::abs(kchecks[0].lhs - 2.0) <= 1e-12 &&
                           std::abs(kchecks[1].lhs - 2.0) <= 1e-12;
    report(8, violations == 0 && kernel_eq,
           "lemma predicates: " + std::to_string(violations) + " violations in " +
               std::to_string(checks) + " evaluations over 10000 samples; quartic and cubic " +
               "kernel equalities " + (kernel_eq ? "attained" : "MISSED"));
}

// ---- criterion 9: byte-identical reports -----------------------------------
void criterion_9() {
#ifdef PETAL_CLI_PATH
    const std::string cli = PETAL_CLI_PATH;
    const std::string dir = []() {
        const char* t = std::getenv("TMPDIR");
        return std::string(t ? t : "/tmp");
    }();
    auto run = [&](const std::string& args, const std::string& out) {
        const std::string cmd = cli + " verify --seed 7 --format json " + args + " > " + out;
        return std::system(cmd.c_str());
    };
    const std::string o1 = dir + "/petal_acc_run1.json";
    const std::string o2 = dir + "/petal_acc_run2.json";
    const std::string o3 = dir + "/petal_acc_run3.json";
    const int s1 = run("", o1);
    const int s2 = run("", o2);
    const int s3 = run("--threads 4", o3);
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string b1 = slurp(o1), b2 = slurp(o2), b3 = slurp(o3);
    const bool ok = s1 == 0 && s2 == 0 && s3 == 0 && !b1.empty() && b1 == b2 && b1 == b3;
    report(9, ok,
           "determinism: two sequential runs " + std::string(b1 == b2 ? "match" : "DIFFER") +
               ", four-thread run " + (b1 == b3 ? "matches" : "DIFFERS") + " (" +
               std::to_string(b1.size()) + " bytes, exit codes " + std::to_string(s1) +
               "/" + std::to_string(s2) + "/" + std::to_string(s3) + ")");
#else
    report(9, false, "determinism: CLI path not wired into this build");
#endif
}

} // namespace

int main() {
    setvbuf(stdout, nullptr, _IONBF, 0);
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();

    const bool only_documented_divergence = failed == std::set<int>{6};
    if (failed.empty()) {
        std::printf("all criteria pass\n");
        return 0;
    }
    std::string list;
    for (int c : failed) list += (list.empty() ? "" : ", ") + std::to_string(c);
    std::printf("failing criteria: %s%s\n", list.c_str(),
                only_documented_divergence
                    ? " (expected: the fourth-order assembly constant is not reproducible "
                      "from its displayed ingredients; every other criterion is green)"
                    : "");
    return only_documented_divergence ? 0 : 1;
}
