#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sievelab {

enum class Comparison : uint8_t {
    abs_diff,    // passed iff |computed - expected| <= tolerance
    greater,     // passed iff computed > expected
    less,        // passed iff computed < expected
    report_only, // always passes; the value is informational
};

std::string to_string(Comparison c);

struct ClaimReport {
    std::string claim_id;
    std::string detail; // what the claim checks, self-contained
    int criterion = 0;  // acceptance-suite grouping, 0 = environment
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    Comparison comparison = Comparison::abs_diff;
    bool passed = false;
    bool skipped = false;
    std::string note;
};

struct CheckOptions {
    uint64_t limit_n = 10'000'000;       // claims whose bound exceeds this are skipped
    std::vector<std::string> selection;  // empty = all
    unsigned threads = 0;                // sieve build parallelism, 0 = auto
};

/// Run every registered claim whose bound fits the limit, in claim_id order.
/// Builds its own sieves; deterministic output for fixed options.
std::vector<ClaimReport> run_claim_checks(const CheckOptions& opts = {});

/// All registered claim ids, sorted.
std::vector<std::string> claim_ids();

/// Human title for a criterion group.
std::string criterion_title(int criterion);

int count_failures(std::span<const ClaimReport> reports);

std::string claims_to_json(std::span<const ClaimReport> reports);
std::string claims_to_csv(std::span<const ClaimReport> reports);

/// Threads cap from the SIEVELAB_THREADS environment variable (0 = auto).
unsigned threads_from_env();

} // namespace sievelab
