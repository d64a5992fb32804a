// SPDX-License-Identifier: Apache-2.0
#pragma once

// Batch verification across a prime range: per admissible prime, the surface
// sum by the requested methods, both class-number oracles, the fiberwise
// divisibility sweep and spot checks of the two counting identities, collected in
// a machine-readable report (JSON, CSV or a console table).

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isosum/fp.hpp"
#include "isosum/int128.hpp"

namespace isosum {

enum class VerifyMethod { naive, direct, fast, all };
enum class ReportFormat { json, csv, table };

std::string to_string(VerifyMethod m);
std::string to_string(ReportFormat f);
VerifyMethod verify_method_from_string(const std::string& s);

struct SweepConfig {
    std::uint64_t from = 7;
    std::uint64_t to = 7;
    VerifyMethod method = VerifyMethod::all;
    int workers = 1;
    ReportFormat format = ReportFormat::table;
    std::string out_path;  // empty: stdout
    bool fail_fast = false;
    bool include_timing = true;
    bool force = false;  // lift the range cap on the O(p^2) methods
    static constexpr std::uint64_t kNaiveCap = 20000;
};

struct PrimeRecord {
    std::uint64_t p = 0;
    std::optional<int128> s_naive;
    std::optional<int128> s_direct;
    std::optional<int128> s_fast;
    std::optional<long long> quotient;
    std::optional<std::uint64_t> h_dirichlet;
    std::optional<std::uint64_t> h_forms;
    bool main_theorem_pass = false;
    std::optional<bool> fiber_divisibility_pass;  // absent on fast-only runs
    long long elapsed_ms = 0;
    std::string error;

    bool passed() const {
        return main_theorem_pass && fiber_divisibility_pass.value_or(true);
    }
    bool operator==(const PrimeRecord&) const = default;
};

struct SweepReport {
    std::string schema_version = "1";
    SweepConfig config;
    std::vector<PrimeRecord> records;
    bool complete = true;  // false when cancelled or stopped by fail-fast

    bool all_pass() const;
};

// Checks one prime p = 1 (mod 3): method agreement, oracle agreement, the
// quotient identity, and (for the exhaustive methods) per-fiber divisibility
// plus closed-form spot checks. Failures land in the record, not in exceptions.
PrimeRecord verify_prime(const Prime& p, VerifyMethod method, bool with_timing);

SweepReport run_verify_sweep(const SweepConfig& config,
                             const std::atomic<bool>* cancel = nullptr);

std::string to_json(const SweepReport& report);
std::string to_csv(const SweepReport& report);
std::string to_table(const SweepReport& report);
std::string serialize(const SweepReport& report, ReportFormat format);

SweepReport report_from_json(const std::string& text);
std::vector<PrimeRecord> records_from_csv(const std::string& text);

} // namespace isosum
