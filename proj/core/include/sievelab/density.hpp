#pragma once

#include <cstdint>
#include <vector>

#include "sievelab/sieve.hpp"

namespace sievelab {

enum class SetSource : uint8_t { L, R, T, PrimesWith1, TwinPrimes };

/// A set of positive integers in [1, limit] as a bitmap. L/R/T hold the
/// nonzero *indices* of the respective wheel sequences; PrimesWith1 holds
/// {1} and every prime (2 and 3 included); TwinPrimes holds every prime
/// that has a prime neighbor at distance 2.
struct IndexSet {
    SetSource source;
    uint64_t limit = 0;
    Bitmap members;
};

IndexSet make_index_set(SetSource source, uint64_t limit, const PrimeFlags& flags);

struct DensityEstimate {
    double schnirelmann = 0.0; // min over 1 <= k <= limit of |S cap [1,k]| / k
    double natural = 0.0;      // |S cap [1,limit]| / limit
};

DensityEstimate density(const IndexSet& set);

struct CoverageReport {
    uint64_t limit = 0;
    std::vector<uint64_t> missing; // integers in [1, limit] not covered
    double schnirelmann_prefix = 0.0;
    double natural_estimate = 0.0;
};

/// Coverage of [1, limit] by s1, s2 and pairwise sums x + y (x in s1, y in s2).
CoverageReport sumset_coverage(const IndexSet& s1, const IndexSet& s2, uint64_t limit);

/// Coverage by sums of at most three elements of the named set.
CoverageReport basis_order3_check(SetSource kind, uint64_t limit, const PrimeFlags& flags);

} // namespace sievelab
