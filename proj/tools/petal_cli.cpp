// petal — command-line surface of the toolkit.
//
// Subcommands: verify (claim-table report), search (witness search for a
// coefficient functional), extremal (power-basis members), maximize (cuboid
// scan of the governing surfaces), admissible (Toeplitz test of a p-vector).
// Exit codes: 0 clean, 1 verification FAIL, 2 usage or input error.

#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "petal/petal_all.hpp"
#include "petal/verify.hpp"

namespace {

using petal::cplx;

// Small-denominator rational recognition (continued fractions). The report
// convention is to print exact fractions next to 12-digit decimals whenever
// a constant is recognizably rational.
std::optional<std::pair<long long, long long>> as_fraction(double v, long long max_den = 1000000) {
    if (!std::isfinite(v)) return std::nullopt;
    const double sign = v < 0 ? -1.0 : 1.0;
    double x = std::abs(v);
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int i = 0; i < 40; ++i) {
        const double fl = std::floor(x);
        if (fl > 1e15) return std::nullopt;
        const long long a = static_cast<long long>(fl);
        const long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double frac = x - fl;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    if (q1 == 0) return std::nullopt;
    if (std::abs(v - sign * static_cast<double>(p1) / static_cast<double>(q1)) > 1e-9)
        return std::nullopt;
    return std::make_pair(static_cast<long long>(sign) * p1, q1);
}

std::string fmt(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.12g", v);
    return b;
}

// "1/3 (0.333333333333)" when rational, plain decimal otherwise
std::string fraction_and_decimal(double v) {
    if (auto f = as_fraction(v)) {
        if (f->second == 1) return std::to_string(f->first);
        return std::to_string(f->first) + "/" + std::to_string(f->second) + " (" + fmt(v) + ")";
    }
    return fmt(v);
}

std::string fmt_complex(cplx z) {
    if (std::abs(z.imag()) < 1e-14) return fmt(z.real());
    return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

// accepts "2", "-1.5", "0.3+0.4i", "1-2i", "2i"
std::optional<cplx> parse_complex(const std::string& s) {
    double re = 0.0, im = 0.0;
    char tail = 0;
    int n = 0;
    if (std::sscanf(s.c_str(), "%lf%lf%c%n", &re, &im, &tail, &n) == 3 && tail == 'i' &&
        n == static_cast<int>(s.size()))
        return cplx(re, im);
    if (std::sscanf(s.c_str(), "%lf%c%n", &re, &tail, &n) == 2 && tail == 'i' &&
        n == static_cast<int>(s.size()))
        return cplx(0.0, re);
    if (std::sscanf(s.c_str(), "%lf%n", &re, &n) == 1 && n == static_cast<int>(s.size()))
        return cplx(re, 0.0);
    return std::nullopt;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

struct functional_spec {
    std::string name;
    double default_bound;
    std::function<double(const petal::coeff_vector&)> eval;
};

// the searchable functionals and the bounds they are tested against
std::optional<functional_spec> lookup_functional(const std::string& name) {
    using petal::coeff_vector;
    namespace ref = petal::ref;
    if (name == "a2") return functional_spec{name, ref::a2_bound, [](const coeff_vector& a) { return std::abs(a.a2); }};
    if (name == "a3") return functional_spec{name, ref::a3_bound, [](const coeff_vector& a) { return std::abs(a.a3); }};
    if (name == "a4") return functional_spec{name, ref::a4_bound, [](const coeff_vector& a) { return std::abs(a.a4); }};
    if (name == "a5") return functional_spec{name, ref::a5_bound, [](const coeff_vector& a) { return std::abs(a.a5); }};
    if (name == "a6") return functional_spec{name, ref::a6_bound, [](const coeff_vector& a) { return std::abs(a.a6); }};
    if (name == "a7") return functional_spec{name, ref::a7_chain, [](const coeff_vector& a) { return std::abs(a.a7); }};
    if (name == "h22") return functional_spec{name, ref::h22_bound, [](const coeff_vector& a) { return petal::h22(a).abs; }};
    if (name == "h23") return functional_spec{name, ref::h23_quoted, [](const coeff_vector& a) { return petal::h23(a).abs; }};
    if (name == "h31") return functional_spec{name, ref::h31_bound, [](const coeff_vector& a) { return petal::h31(a).abs; }};
    if (name == "h41") return functional_spec{name, ref::h41_quoted, [](const coeff_vector& a) { return petal::h41(a).abs; }};
    if (name.rfind("fs:", 0) == 0) {
        try {
            std::size_t used = 0;
            const double mu = std::stod(name.substr(3), &used);
            if (3 + used != name.size()) return std::nullopt;
            return functional_spec{name, 0.5 * std::max(1.0, std::abs(2.0 * mu - 1.0)),
                                   [mu](const coeff_vector& a) { return petal::fekete_szego(a, mu).abs; }};
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

int cmd_verify(const petal::verify_options& opt, const std::string& format, bool timing) {
    const auto t0 = std::chrono::steady_clock::now();
    const petal::verify_report rep = petal::run_verify(opt);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    const std::optional<long long> elapsed =
        timing ? std::optional<long long>(ms) : std::nullopt;
    if (format == "json")
        std::fputs(petal::report_to_json(rep, elapsed).c_str(), stdout);
    else
        std::fputs(petal::report_to_markdown(rep, elapsed).c_str(), stdout);
    return rep.any_fail() ? 1 : 0;
}

int cmd_search(const functional_spec& fs, double bound, long budget, std::uint64_t seed,
               const std::string& format) {
    const petal::search_report rep =
        petal::witness_search(fs.name, fs.eval, bound, budget, seed);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["functional"] = rep.functional;
        j["claimed_bound"] = rep.claimed_bound;
        j["best_value"] = rep.best_value;
        j["gap"] = rep.claimed_bound - rep.best_value;
        j["witness_p"] = nlohmann::ordered_json::array();
        for (const auto& p : rep.witness.p)
            j["witness_p"].push_back({{"re", p.real()}, {"im", p.imag()}});
        j["samples"] = rep.samples;
        j["seed"] = rep.seed;
        j["violation"] = rep.violation;
        std::fputs((j.dump(2) + "\n").c_str(), stdout);
    } else {
        std::printf("functional     %s\n", rep.functional.c_str());
        std::printf("claimed bound  %s\n", fraction_and_decimal(rep.claimed_bound).c_str());
        std::printf("best witness   %s\n", fmt(rep.best_value).c_str());
        std::printf("gap            %s\n", fmt(rep.claimed_bound - rep.best_value).c_str());
        for (std::size_t k = 0; k < rep.witness.p.size(); ++k)
            std::printf("  p%zu = %s\n", k + 1, fmt_complex(rep.witness.p[k]).c_str());
        std::printf("samples        %ld\nseed           %llu\n", rep.samples,
                    static_cast<unsigned long long>(rep.seed));
        if (rep.violation)
            std::printf("NOTE: best witness exceeds the claimed bound\n");
    }
    return 0;
}

int cmd_extremal(int n, int order, const std::string& format) {
    const petal::class_member f = petal::extremal_fn(n, order);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["order"] = order;
        j["provenance"] = f.describe();
        j["coefficients"] = nlohmann::ordered_json::array();
        for (int k = 1; k <= order; ++k) {
            nlohmann::ordered_json c;
            c["k"] = k;
            if (auto fr = as_fraction(f.coeff(k).real());
                fr && std::abs(f.coeff(k).imag()) < 1e-12)
                c["fraction"] = std::to_string(fr->first) + "/" + std::to_string(fr->second);
            c["value"] = f.coeff(k).real();
            j["coefficients"].push_back(std::move(c));
        }
        std::fputs((j.dump(2) + "\n").c_str(), stdout);
    } else {
        std::printf("%s: coefficients a1..a%d\n", f.describe().c_str(), order);
        std::string line = "[";
        for (int k = 1; k <= order; ++k) {
            if (k > 1) line += ", ";
            if (auto fr = as_fraction(f.coeff(k).real())) {
                line += std::to_string(fr->first);
                if (fr->second != 1) line += "/" + std::to_string(fr->second);
            } else {
                line += fmt(f.coeff(k).real());
            }
        }
        line += "]";
        std::printf("%s\n", line.c_str());
        for (int k = 1; k <= order; ++k)
            if (std::abs(f.coeff(k)) > 1e-14)
                std::printf("  a%-2d = %s\n", k, fraction_and_decimal(f.coeff(k).real()).c_str());
    }
    return 0;
}

int cmd_maximize(const std::string& surface, int resolution, const std::string& format) {
    auto obj = surface == "h23"
                   ? +[](double p, double x, double y) { return petal::eval_M23(p, x, y); }
                   : +[](double p, double x, double y) { return petal::eval_M(p, x, y); };
    const petal::cuboid_result r = petal::cuboid_max(obj, resolution);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["surface"] = surface;
        j["resolution"] = r.grid_resolution;
        j["max_value"] = r.max_value;
        j["argmax"] = {r.argmax[0], r.argmax[1], r.argmax[2]};
        j["interior_critical_points"] = r.interior_critical_points.size();
        j["regions"] = nlohmann::ordered_json::array();
        for (const auto& reg : r.face_edge_table)
            j["regions"].push_back({{"label", reg.label},
                                    {"max_value", reg.max_value},
                                    {"argmax", {reg.argmax[0], reg.argmax[1], reg.argmax[2]}}});
        std::fputs((j.dump(2) + "\n").c_str(), stdout);
    } else {
        std::printf("surface %s on [0,2]x[0,1]x[0,1], resolution %d\n", surface.c_str(),
                    r.grid_resolution);
        std::printf("max %s at (%s, %s, %s)\n", fraction_and_decimal(r.max_value).c_str(),
                    fmt(r.argmax[0]).c_str(), fmt(r.argmax[1]).c_str(), fmt(r.argmax[2]).c_str());
        std::printf("interior critical points: %zu\n", r.interior_critical_points.size());
        std::printf("%-10s %-16s argmax\n", "region", "max");
        for (const auto& reg : r.face_edge_table)
            std::printf("%-10s %-16s (%s, %s, %s)\n", reg.label.c_str(),
                        fmt(reg.max_value).c_str(), fmt(reg.argmax[0]).c_str(),
                        fmt(reg.argmax[1]).c_str(), fmt(reg.argmax[2]).c_str());
    }
    return 0;
}

int cmd_admissible(const std::string& list, const std::string& format) {
    petal::p_vector pv;
    for (const auto& tok : split(list, ',')) {
        const auto z = parse_complex(tok);
        if (!z) {
            std::fprintf(stderr, "petal: cannot parse '%s' as a complex number\n", tok.c_str());
            return 2;
        }
        pv.p.push_back(*z);
    }
    const double mineig = petal::toeplitz_min_eigenvalue(pv.p);
    const petal::verdict v = petal::toeplitz_admissible(pv.p);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["p"] = nlohmann::ordered_json::array();
        for (const auto& p : pv.p) j["p"].push_back({{"re", p.real()}, {"im", p.imag()}});
        j["verdict"] = petal::to_string(v);
        j["toeplitz_min_eigenvalue"] = mineig;
        std::fputs((j.dump(2) + "\n").c_str(), stdout);
    } else {
        std::printf("%s\n", petal::to_string(v));
        std::printf("Toeplitz minimum eigenvalue: %s\n", fmt(mineig).c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification and search toolkit for the petal-shaped starlike class"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);
    app.fallthrough();  // global flags (--format) may follow the subcommand

    std::string format = "markdown";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "markdown"}))
        ->capture_default_str();

    std::uint64_t seed = 7;
    long budget = 20000;
    int resolution = 201;
    int threads = 1;
    int order = petal::default_order;
    bool timing = false;

    auto* verify = app.add_subcommand("verify", "recompute the claim table and report");
    std::string claim_filter;
    verify->add_option("--seed", seed, "base seed for the randomized claims")->capture_default_str();
    verify->add_option("--budget", budget, "witness-search budget per functional")->capture_default_str();
    verify->add_option("--resolution", resolution, "cuboid grid resolution")->capture_default_str();
    verify->add_option("--claim", claim_filter, "run only claims whose id contains this substring");
    verify->add_option("--threads", threads, "worker threads across claims")->capture_default_str();
    verify->add_flag("--timing", timing, "include elapsed_ms in the report");

    auto* search = app.add_subcommand("search", "witness search for a coefficient functional");
    std::string functional;
    double bound = -1.0;
    bool bound_set = false;
    search->add_option("functional", functional,
                       "one of a2..a7, h22, h23, h31, h41, or fs:<mu>")
        ->required();
    search->add_option("--bound", bound, "claimed bound to test against")
        ->each([&bound_set](const std::string&) { bound_set = true; });
    search->add_option("--budget", budget, "sampling budget")->capture_default_str();
    search->add_option("--seed", seed, "seed")->capture_default_str();

    auto* extremal = app.add_subcommand("extremal", "coefficients of the n-th power-basis member");
    int extremal_n = 2;
    extremal->add_option("n", extremal_n, "power index (w = z^n)")->required();
    extremal->add_option("--order", order, "series order")->capture_default_str();

    auto* maximize = app.add_subcommand("maximize", "cuboid maximum of a governing surface");
    std::string surface = "h31";
    maximize->add_option("--surface", surface, "which surface")
        ->check(CLI::IsMember({"h31", "h23"}))
        ->capture_default_str();
    maximize->add_option("--resolution", resolution, "grid resolution")->capture_default_str();

    auto* admissible = app.add_subcommand("admissible", "Toeplitz admissibility of a p-vector");
    std::string plist;
    admissible->add_option("p", plist, "comma-separated entries, e.g. 2,2,2 or 1+0.5i,0.3")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            petal::verify_options opt;
            opt.seed = seed;
            opt.budget = budget;
            opt.resolution = resolution;
            opt.threads = threads;
            opt.claim_filter = claim_filter;
            return cmd_verify(opt, format, timing);
        }
        if (search->parsed()) {
            const auto fs = lookup_functional(functional);
            if (!fs) {
                std::fprintf(stderr, "petal: unknown functional '%s'\n", functional.c_str());
                return 2;
            }
            return cmd_search(*fs, bound_set ? bound : fs->default_bound, budget, seed, format);
        }
        if (extremal->parsed()) return cmd_extremal(extremal_n, order, format);
        if (maximize->parsed()) return cmd_maximize(surface, resolution, format);
        if (admissible->parsed()) return cmd_admissible(plist, format);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "petal: %s\n", e.what());
        return 2;
    }
    return 2;
}
