// SPDX-License-Identifier: Apache-2.0
#include "isosum/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "isosum/class_number.hpp"
#include "isosum/isogeny3.hpp"
#include "isosum/surface.hpp"

namespace isosum {

namespace {

using nlohmann::json;

bool wants_naive(VerifyMethod m) { return m == VerifyMethod::naive || m == VerifyMethod::all; }
bool wants_direct(VerifyMethod m) { return m == VerifyMethod::direct || m == VerifyMethod::all; }
bool wants_fast(VerifyMethod m) { return m == VerifyMethod::fast || m == VerifyMethod::all; }
bool exhaustive(VerifyMethod m) { return wants_naive(m) || wants_direct(m); }

// deterministic x sample for the closed-form spot checks
std::vector<std::uint64_t> spot_check_xs(std::uint64_t p) {
    std::vector<std::uint64_t> xs;
    for (std::uint64_t x : {std::uint64_t(1), std::uint64_t(2), std::uint64_t(3), (p - 1) / 2,
                            p - 2, p - 1}) {
        if (x >= 1 && x < p && std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    return xs;
}

std::string opt_to_string(const std::optional<int128>& v) {
    return v ? to_string(*v) : std::string();
}

json opt_json(const std::optional<int128>& v) { return v ? json(to_string(*v)) : json(); }
json opt_json(const std::optional<long long>& v) {
    return v ? json(std::to_string(*v)) : json();
}
json opt_json(const std::optional<std::uint64_t>& v) {
    return v ? json(std::to_string(*v)) : json();
}
json opt_json(const std::optional<bool>& v) { return v ? json(*v) : json(); }

std::optional<int128> opt_i128_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return int128_from_string(j.get<std::string>());
}
std::optional<long long> opt_ll_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return std::stoll(j.get<std::string>());
}
std::optional<std::uint64_t> opt_u64_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return std::stoull(j.get<std::string>());
}
std::optional<bool> opt_bool_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<bool>();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

constexpr const char* kCsvHeader =
    "p,S_tau_naive,S_tau_direct,S_tau_fast,quotient,h_star_dirichlet,h_star_forms,"
    "main_theorem_pass,fiber_divisibility_pass,elapsed_ms";

} // namespace

std::string to_string(VerifyMethod m) {
    switch (m) {
        case VerifyMethod::naive: return "naive";
        case VerifyMethod::direct: return "direct";
        case VerifyMethod::fast: return "fast";
        case VerifyMethod::all: return "all";
    }
    return "all";
}

std::string to_string(ReportFormat f) {
    switch (f) {
        case ReportFormat::json: return "json";
        case ReportFormat::csv: return "csv";
        case ReportFormat::table: return "table";
    }
    return "table";
}

VerifyMethod verify_method_from_string(const std::string& s) {
    if (s == "naive") return VerifyMethod::naive;
    if (s == "direct") return VerifyMethod::direct;
    if (s == "fast") return VerifyMethod::fast;
    if (s == "all") return VerifyMethod::all;
    throw std::invalid_argument("unknown method: " + s);
}

bool SweepReport::all_pass() const {
    for (const auto& r : records)
        if (!r.passed()) return false;
    return true;
}

PrimeRecord verify_prime(const Prime& p, VerifyMethod method, bool with_timing) {
    PrimeRecord rec;
    rec.p = p.value();
    auto start = std::chrono::steady_clock::now();
    try {
        std::optional<int128> reference;
        auto take = [&reference](const SurfaceSumResult& r) {
            if (!reference) reference = r.integer_value;
            return r.integer_value;
        };
        if (wants_naive(method)) rec.s_naive = take(surface_sum_fiberwise(p));
        if (wants_direct(method)) rec.s_direct = take(surface_sum_direct(p));
        if (wants_fast(method)) rec.s_fast = take(surface_sum_fast(p));

        bool agree = true;
        for (const auto& s : {rec.s_naive, rec.s_direct, rec.s_fast})
            if (s && *s != *reference) agree = false;

        rec.h_dirichlet = h_star_dirichlet(p).h_star;
        rec.h_forms = h_star_forms(p).h_star;
        rec.quotient = (long long)(*reference / int128(p.value()));

        int128 predicted =
            int128(p.value()) * (int128(*rec.h_forms) - int128((p.value() - 1) / 2));
        rec.main_theorem_pass = agree && *reference % int128(p.value()) == 0 &&
                                *reference == predicted && *rec.h_dirichlet == *rec.h_forms;

        if (exhaustive(method)) {
            auto tables = std::make_shared<const ResidueTables>(p);
            bool fibers_ok = true;
            for (std::uint64_t t = 1; t <= (p.value() - 1) / 2 && fibers_ok; ++t) {
                FiberSum fs = FiberIsogeny(p, Fp(p, p.mul(t, t)), tables).sum();
                fibers_ok = fs.parts.is_integral() && fs.value % int128(p.value()) == 0;
            }
            rec.fiber_divisibility_pass = fibers_ok;
            for (std::uint64_t x : spot_check_xs(p.value())) {
                row_character_sum(p, x, tables.get());  // throws if the row sum deviates
                long long expected =
                    tables->legendre(x) == -1 ? (p.value() - 1) / 2 : (p.value() - 3) / 2;
                if (count_y_quadratic(p, x, tables.get()) != expected)
                    throw std::runtime_error("y-count deviates from its closed form");
            }
        }
    } catch (const std::exception& e) {
        rec.error = e.what();
        rec.main_theorem_pass = false;
        if (exhaustive(method)) rec.fiber_divisibility_pass = false;
    }
    if (with_timing) {
        auto end = std::chrono::steady_clock::now();
        rec.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    }
    return rec;
}

SweepReport run_verify_sweep(const SweepConfig& config, const std::atomic<bool>* cancel) {
    if (config.from < 5) throw std::invalid_argument("verify: range must start at 5 or above");
    if (config.to < config.from) throw std::invalid_argument("verify: empty range bounds");
    if (config.workers < 1) throw std::invalid_argument("verify: need at least one worker");
    if (exhaustive(config.method) && config.to > SweepConfig::kNaiveCap && !config.force)
        throw std::invalid_argument(
            "verify: the naive/direct methods are capped at p <= 20000; pass --force to override");

    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = config.from; n <= config.to; ++n)
        if (n % 3 == 1 && is_prime_u64(n)) primes.push_back(n);

    SweepReport report;
    report.config = config;
    report.records.assign(primes.size(), PrimeRecord{});
    std::vector<char> done(primes.size(), 0);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    auto work = [&] {
        while (!stop.load()) {
            if (cancel && cancel->load()) break;
            std::size_t i = next.fetch_add(1);
            if (i >= primes.size()) break;
            Prime p(primes[i]);
            report.records[i] = verify_prime(p, config.method, config.include_timing);
            done[i] = 1;
            if (config.fail_fast && !report.records[i].passed()) stop.store(true);
        }
    };

    int threads = int(std::min<std::size_t>(std::size_t(config.workers), primes.size()));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // keep the longest completed prefix so cancelled/fail-fast runs stay
    // deterministic up to the cut
    std::size_t keep = 0;
    while (keep < done.size() && done[keep]) ++keep;
    if (keep < report.records.size()) {
        report.records.resize(keep);
        report.complete = false;
    }
    if (config.fail_fast && !report.all_pass()) {
        std::size_t cut = 0;
        while (cut < report.records.size() && report.records[cut].passed()) ++cut;
        if (cut + 1 < report.records.size()) report.records.resize(cut + 1);
        report.complete = false;
    }
    return report;
}

std::string to_json(const SweepReport& report) {
    json j;
    j["schema_version"] = report.schema_version;
    j["config"] = {{"from", std::to_string(report.config.from)},
                   {"to", std::to_string(report.config.to)},
                   {"method", to_string(report.config.method)},
                   {"fail_fast", report.config.fail_fast}};
    j["complete"] = report.complete;
    j["all_pass"] = report.all_pass();
    json records = json::array();
    for (const auto& r : report.records) {
        json rj;
        rj["p"] = std::to_string(r.p);
        rj["s_tau_naive"] = opt_json(r.s_naive);
        rj["s_tau_direct"] = opt_json(r.s_direct);
        rj["s_tau_fast"] = opt_json(r.s_fast);
        rj["quotient"] = opt_json(r.quotient);
        rj["h_star_dirichlet"] = opt_json(r.h_dirichlet);
        rj["h_star_forms"] = opt_json(r.h_forms);
        rj["main_theorem_pass"] = r.main_theorem_pass;
        rj["fiber_divisibility_pass"] = opt_json(r.fiber_divisibility_pass);
        rj["elapsed_ms"] = std::to_string(r.elapsed_ms);
        if (!r.error.empty()) rj["error"] = r.error;
        records.push_back(std::move(rj));
    }
    j["records"] = std::move(records);
    return j.dump(2) + "\n";
}

SweepReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    SweepReport report;
    report.schema_version = j.at("schema_version").get<std::string>();
    report.config.from = std::stoull(j.at("config").at("from").get<std::string>());
    report.config.to = std::stoull(j.at("config").at("to").get<std::string>());
    report.config.method = verify_method_from_string(j.at("config").at("method").get<std::string>());
    report.config.fail_fast = j.at("config").at("fail_fast").get<bool>();
    report.complete = j.at("complete").get<bool>();
    for (const auto& rj : j.at("records")) {
        PrimeRecord r;
        r.p = std::stoull(rj.at("p").get<std::string>());
        r.s_naive = opt_i128_from(rj.at("s_tau_naive"));
        r.s_direct = opt_i128_from(rj.at("s_tau_direct"));
        r.s_fast = opt_i128_from(rj.at("s_tau_fast"));
        r.quotient = opt_ll_from(rj.at("quotient"));
        r.h_dirichlet = opt_u64_from(rj.at("h_star_dirichlet"));
        r.h_forms = opt_u64_from(rj.at("h_star_forms"));
        r.main_theorem_pass = rj.at("main_theorem_pass").get<bool>();
        r.fiber_divisibility_pass = opt_bool_from(rj.at("fiber_divisibility_pass"));
        r.elapsed_ms = std::stoll(rj.at("elapsed_ms").get<std::string>());
        if (rj.contains("error")) r.error = rj.at("error").get<std::string>();
        report.records.push_back(std::move(r));
    }
    return report;
}

std::string to_csv(const SweepReport& report) {
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const auto& r : report.records) {
        out << r.p << ',' << opt_to_string(r.s_naive) << ',' << opt_to_string(r.s_direct) << ','
            << opt_to_string(r.s_fast) << ',';
        if (r.quotient) out << *r.quotient;
        out << ',';
        if (r.h_dirichlet) out << *r.h_dirichlet;
        out << ',';
        if (r.h_forms) out << *r.h_forms;
        out << ',' << (r.main_theorem_pass ? "true" : "false") << ',';
        if (r.fiber_divisibility_pass) out << (*r.fiber_divisibility_pass ? "true" : "false");
        out << ',' << r.elapsed_ms << "\n";
    }
    return out.str();
}

std::vector<PrimeRecord> records_from_csv(const std::string& text) {
    std::vector<PrimeRecord> out;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) return out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_csv_line(line);
        if (f.size() != 10) throw std::invalid_argument("csv: expected 10 columns");
        PrimeRecord r;
        r.p = std::stoull(f[0]);
        if (!f[1].empty()) r.s_naive = int128_from_string(f[1]);
        if (!f[2].empty()) r.s_direct = int128_from_string(f[2]);
        if (!f[3].empty()) r.s_fast = int128_from_string(f[3]);
        if (!f[4].empty()) r.quotient = std::stoll(f[4]);
        if (!f[5].empty()) r.h_dirichlet = std::stoull(f[5]);
        if (!f[6].empty()) r.h_forms = std::stoull(f[6]);
        r.main_theorem_pass = f[7] == "true";
        if (!f[8].empty()) r.fiber_divisibility_pass = f[8] == "true";
        r.elapsed_ms = std::stoll(f[9]);
        out.push_back(std::move(r));
    }
    return out;
}

std::string to_table(const SweepReport& report) {
    std::ostringstream out;
    out << std::left << std::setw(8) << "p" << std::setw(16) << "S_naive" << std::setw(16)
        << "S_direct" << std::setw(16) << "S_fast" << std::setw(10) << "quotient" << std::setw(6)
        << "h_d" << std::setw(6) << "h_f" << std::setw(8) << "main" << std::setw(8) << "fibers"
        << std::setw(10) << "ms" << "\n";
    for (const auto& r : report.records) {
        auto cell = [](const std::optional<int128>& v) {
            return v ? to_string(*v) : std::string("-");
        };
        out << std::left << std::setw(8) << r.p << std::setw(16) << cell(r.s_naive)
            << std::setw(16) << cell(r.s_direct) << std::setw(16) << cell(r.s_fast)
            << std::setw(10) << (r.quotient ? std::to_string(*r.quotient) : "-") << std::setw(6)
            << (r.h_dirichlet ? std::to_string(*r.h_dirichlet) : "-") << std::setw(6)
            << (r.h_forms ? std::to_string(*r.h_forms) : "-") << std::setw(8)
            << (r.main_theorem_pass ? "pass" : "FAIL") << std::setw(8)
            << (r.fiber_divisibility_pass ? (*r.fiber_divisibility_pass ? "pass" : "FAIL") : "-")
            << std::setw(10) << r.elapsed_ms << "\n";
        if (!r.error.empty()) out << "  ! " << r.error << "\n";
    }
    out << (report.complete ? "" : "(incomplete)\n");
    out << (report.all_pass() ? "all pass" : "FAILURES PRESENT") << " (" << report.records.size()
        << " primes)\n";
    return out.str();
}

std::string serialize(const SweepReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::json: return to_json(report);
        case ReportFormat::csv: return to_csv(report);
        case ReportFormat::table: return to_table(report);
    }
    return to_table(report);
}

} // namespace isosum
