#pragma once

// Exhaustive cross-checking of the Menon evaluators against each other.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gcdsum/menon.hpp"

namespace gcdsum {

struct ModePair {
    Mode first;
    Mode second;

    bool operator==(const ModePair&) const = default;
};

/// The six unordered pairs of distinct modes.
std::vector<ModePair> all_mode_pairs();
/// "grouped:closed" -> {grouped, closed}.
std::optional<ModePair> parse_mode_pair(std::string_view text);
std::string mode_pair_name(const ModePair& pair);

struct VerifyOptions {
    std::uint64_t max_n = 24;
    std::vector<unsigned> k_list{0, 1, 2};
    std::vector<ModePair> pairs = all_mode_pairs();
    bool parallel = false;
    unsigned threads = 0; // 0: hardware concurrency
    std::uint64_t work_cap = kDefaultWorkCap;
};

struct Mismatch {
    std::uint64_t n;
    std::uint64_t char_index;
    unsigned k;
    Mode mode_a;
    mpz_class value_a;
    Mode mode_b;
    mpz_class value_b;

    bool operator==(const Mismatch&) const = default;
};

struct VerificationReport {
    std::uint64_t max_n = 0;
    std::vector<unsigned> k_list;
    std::vector<ModePair> pairs;
    std::uint64_t cases_run = 0;
    std::vector<Mismatch> mismatches; // ordered by (n, char_index, k, pair)
    double elapsed_seconds = 0;

    bool ok() const { return mismatches.empty(); }
};

/// sum_{n <= max_n} phi(n) * |k_list| * |pairs|.
std::uint64_t predicted_cases(const VerifyOptions& options);

/// Every n in 1..max_n, every character mod n, every k, every pair.
/// Throws resource_error if a requested naive evaluation is over the work cap.
VerificationReport run_verification(const VerifyOptions& options);

} // namespace gcdsum
