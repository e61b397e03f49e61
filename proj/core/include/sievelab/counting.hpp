#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sievelab/sieve.hpp"

namespace sievelab {

/// Which bitmap-window construction produced a gap count, fixed by g mod 6.
enum class GapConstruction : uint8_t { AshiftMinusB, AA_plus_BB, BshiftMinusA, TwinDirect };

std::string to_string(GapConstruction c);

struct GapCount {
    uint64_t g = 0;
    uint64_t n = 0;
    uint64_t count = 0;
    GapConstruction construction_used = GapConstruction::TwinDirect;
};

struct GoldbachCount {
    uint64_t g = 0;
    uint64_t count = 0;    // unordered representations p + q = g, 5 <= p <= q
    double raw_half = 0.0; // the construction's scaled cell count before center handling
};

struct TwinPatternCount {
    uint64_t shift = 0;
    uint64_t m = 0;
    uint64_t count = 0;
};

/// Primes of one wheel class not exceeding n (2 and 3 are never counted).
uint64_t count_primes(const PrimeFlags& flags, WheelClass klass, uint64_t n);

/// Pairs of primes (p, p+g) with 5 <= p <= n, both prime, computed by the
/// class-appropriate window construction. All counts ignore the primes 2
/// and 3, so e.g. the twin pair (3,5) is not seen.
GapCount count_gap_pairs(const PrimeFlags& flags, uint64_t g, uint64_t n);

/// Unordered representations g = p + q with p <= q, both prime >= 5.
/// Defined for even g >= 10.
GoldbachCount count_goldbach(const PrimeFlags& flags, uint64_t g);

/// Twin pairs at index i <= m whose translate by `shift` is also a twin pair;
/// shift 1 counts prime quadruplets (p, p+2, p+6, p+8).
TwinPatternCount count_twin_patterns(const TwinFlags& twin, uint64_t shift, uint64_t m);

/// Unordered index pairs i <= j with i + j = m and both twin bits set; each
/// such pair represents all three of 6m-2, 6m, 6m+2 as sums of two primes
/// that each belong to a twin pair.
uint64_t count_twin_goldbach(const TwinFlags& twin, uint64_t m);

/// All m <= limit with count_twin_goldbach(m) == 0, ascending.
std::vector<uint64_t> find_twin_goldbach_exceptions(const TwinFlags& twin, uint64_t limit);

} // namespace sievelab
