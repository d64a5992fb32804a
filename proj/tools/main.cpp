// SPDX-License-Identifier: Apache-2.0

// Command-line front end: fiber and surface character sums, class-number
// oracles, the 2-isogeny example, and the batch verification sweep.

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "isosum/class_number.hpp"
#include "isosum/curve.hpp"
#include "isosum/fp.hpp"
#include "isosum/isogeny3.hpp"
#include "isosum/surface.hpp"
#include "isosum/sweep.hpp"
#include "isosum/two_isogeny.hpp"

namespace {

std::atomic<bool> g_interrupted{false};

void on_signal(int) { g_interrupted.store(true); }

std::string point_str(const isosum::Point& P) {
    if (P.is_infinity()) return "infinity";
    return "(" + std::to_string(P.x().lift()) + ", " + std::to_string(P.y().lift()) + ")";
}

int default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

int cmd_fiber_sum(std::uint64_t pv, std::uint64_t dv) {
    isosum::Prime p(pv);
    if (!p.is_one_mod_3()) throw std::domain_error("fiber-sum: p must be 1 (mod 3)");
    isosum::Fp d(p, dv);
    if (legendre(d) != 1)
        throw std::domain_error("fiber-sum: d must be a nonzero square mod p");
    isosum::FiberIsogeny fiber(p, d);
    auto fs = fiber.sum();
    auto relation = fiber.coset_relation();
    std::cout << "p                 " << pv << "\n"
              << "d                 " << d.lift() << "\n"
              << "d'                " << fiber.d_prime().lift() << "\n"
              << "alpha             " << fiber.alpha().lift() << "\n"
              << "T                 " << point_str(fiber.torsion_point()) << "\n"
              << "(-4d/p)_3         zeta^" << fiber.minus_4d_symbol().exponent() << "\n"
              << "chi(T)            zeta^" << fiber.character(fiber.torsion_point()).exponent()
              << "\n"
              << "Q                 " << point_str(fiber.coset_rep()) << "\n"
              << "coset vs closed   "
              << (relation == isosum::CosetRelation::equal ? "equal" : "conjugate") << "\n"
              << "S parts           " << isosum::to_string(fs.parts.c0) << " + "
              << isosum::to_string(fs.parts.c1) << " zeta + " << isosum::to_string(fs.parts.c2)
              << " zeta^2\n"
              << "S                 " << isosum::to_string(fs.value) << "\n"
              << "S / p             " << isosum::to_string(fs.quotient) << "\n";
    return 0;
}

int cmd_surface_sum(std::uint64_t pv, const std::string& method, int workers) {
    isosum::Prime p(pv);
    if (!p.is_one_mod_3()) throw std::domain_error("surface-sum: p must be 1 (mod 3)");
    bool naive = method == "naive" || method == "all";
    bool direct = method == "direct" || method == "all";
    bool fast = method == "fast" || method == "all";
    std::optional<isosum::int128> value;
    bool agree = true;
    auto show = [&](const char* name, const isosum::SurfaceSumResult& r) {
        std::cout << "S_tau (" << name << ")   " << isosum::to_string(r.integer_value) << "\n";
        if (!value) value = r.integer_value;
        else if (*value != r.integer_value) agree = false;
    };
    if (naive) show("naive ", isosum::surface_sum_fiberwise(p, workers));
    if (direct) show("direct", isosum::surface_sum_direct(p, workers));
    if (fast) show("fast  ", isosum::surface_sum_fast(p));
    long long quotient = (long long)(*value / isosum::int128(pv));
    auto hd = isosum::h_star_dirichlet(p);
    auto hf = isosum::h_star_forms(p);
    long long predicted = (long long)hf.h_star - (long long)((pv - 1) / 2);
    bool pass = agree && *value % isosum::int128(pv) == 0 && quotient == predicted &&
                hd.h_star == hf.h_star;
    std::cout << "S_tau / p        " << quotient << "\n"
              << "h* (dirichlet)   " << hd.h_star << "\n"
              << "h* (forms)       " << hf.h_star << "\n"
              << "h* - (p-1)/2     " << predicted << "\n"
              << "identity         " << (pass ? "pass" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

int cmd_class_number(std::uint64_t pv, const std::string& method) {
    isosum::Prime p(pv);
    bool both = method == "both";
    std::optional<std::uint64_t> hd, hf;
    if (both || method == "dirichlet") {
        hd = isosum::h_star_dirichlet(p).h_star;
        std::cout << "h* (dirichlet)   " << *hd << "\n";
    }
    if (both || method == "forms") {
        hf = isosum::h_star_forms(p).h_star;
        std::cout << "h* (forms)       " << *hf << "\n";
    }
    if (both) {
        bool ok = *hd == *hf;
        std::cout << "agreement        " << (ok ? "pass" : "FAIL") << "\n";
        return ok ? 0 : 1;
    }
    return 0;
}

int cmd_two_isogeny(std::uint64_t pv) {
    isosum::Prime p(pv);
    auto c = isosum::build_two_isogeny(p);
    std::cout << "p                " << pv << "\n"
              << "curve            y^2 = x^3 + 2x^2 - 2x - 4\n"
              << "group order      " << c.group_order() << "\n"
              << "trace            " << c.trace() << "\n"
              << "reduction        " << (c.ordinary() ? "ordinary" : "supersingular") << "\n";
    if (!c.ordinary()) {
        std::cout << "sum              skipped (supersingular reduction)\n";
        return 0;
    }
    if (!c.has_endomorphism()) {
        std::cout << "sum              skipped (no rational isomorphism onto the curve)\n";
        return 0;
    }
    auto s = isosum::two_isogeny_sum(c);
    auto hf = isosum::h_star_forms(p);
    std::cout << "S_tau            " << s.value << "\n"
              << "-S_tau / p       " << -s.quotient << "\n"
              << "h*(p) (forms)    " << hf.h_star << "\n";
    bool match = -s.quotient == (long long)hf.h_star;
    std::cout << "match            " << (match ? "yes" : "NO") << "\n";
    return match ? 0 : 1;
}

int cmd_verify(isosum::SweepConfig config) {
    std::signal(SIGINT, on_signal);
    auto report = isosum::run_verify_sweep(config, &g_interrupted);
    emit(isosum::serialize(report, config.format), config.out_path);
    if (g_interrupted.load()) {
        std::cerr << "interrupted; partial report flushed\n";
        return 130;
    }
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exhaustive verification of isogeny character sums and class numbers"};
    app.require_subcommand(1);
    app.set_config("--config");

    std::uint64_t p_arg = 0, d_arg = 0, from = 7, to = 199;
    std::string method_surface = "all", method_class = "both";
    std::string format = "table", out_path;
    int workers = default_workers();
    bool fail_fast = false, no_timing = false, force = false;

    auto* fiber = app.add_subcommand("fiber-sum", "character sum of one 3-isogeny fiber");
    fiber->add_option("--p", p_arg, "prime, 1 (mod 3)")->required();
    fiber->add_option("--d", d_arg, "curve parameter, a nonzero square mod p")->required();

    auto* surface = app.add_subcommand("surface-sum", "global sum over the elliptic surface");
    surface->add_option("--p", p_arg, "prime, 1 (mod 3)")->required();
    surface->add_option("--method", method_surface, "naive|direct|fast|all")
        ->check(CLI::IsMember({"naive", "direct", "fast", "all"}));
    surface->add_option("--workers", workers, "worker threads")->envname("ISOSUM_WORKERS");

    auto* klass = app.add_subcommand("class-number", "h*(p) by one or both oracles");
    klass->add_option("--p", p_arg, "prime > 3")->required();
    klass->add_option("--method", method_class, "dirichlet|forms|both")
        ->check(CLI::IsMember({"dirichlet", "forms", "both"}));

    auto* two = app.add_subcommand("two-isogeny", "the degree-2 example curve");
    two->add_option("--p", p_arg, "prime > 3")->required();

    auto* verify = app.add_subcommand("verify", "sweep a prime range and verify every identity");
    std::string method_verify = "all";
    verify->add_option("--from", from, "range start (>= 5)")->required();
    verify->add_option("--to", to, "range end")->required();
    verify->add_option("--method", method_verify, "naive|direct|fast|all")
        ->check(CLI::IsMember({"naive", "direct", "fast", "all"}));
    verify->add_option("--workers", workers, "worker threads")->envname("ISOSUM_WORKERS");
    verify->add_option("--format", format, "json|csv|table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    verify->add_option("--out", out_path, "write the report to a file");
    verify->add_flag("--fail-fast", fail_fast, "stop at the first falsified identity");
    verify->add_flag("--no-timing", no_timing, "report elapsed_ms as 0 (reproducible bytes)");
    verify->add_flag("--force", force, "lift the p <= 20000 cap on naive/direct");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fiber->parsed()) return cmd_fiber_sum(p_arg, d_arg);
        if (surface->parsed()) return cmd_surface_sum(p_arg, method_surface, workers);
        if (klass->parsed()) return cmd_class_number(p_arg, method_class);
        if (two->parsed()) return cmd_two_isogeny(p_arg);
        if (verify->parsed()) {
            isosum::SweepConfig config;
            config.from = from;
            config.to = to;
            config.method = isosum::verify_method_from_string(method_verify);
            config.workers = workers;
            config.format = format == "json"  ? isosum::ReportFormat::json
                            : format == "csv" ? isosum::ReportFormat::csv
                                              : isosum::ReportFormat::table;
            config.out_path = out_path;
            config.fail_fast = fail_fast;
            config.include_timing = !no_timing;
            config.force = force;
            return cmd_verify(config);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
