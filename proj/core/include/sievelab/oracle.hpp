#pragma once

#include <cstdint>
#include <vector>

namespace sievelab::oracle {

// Reference implementations, deliberately independent of the wheel-sieve
// code path: plain trial division and a classic Eratosthenes sieve over the
// integers. Used by the claim harness and the tests as the second route.

bool is_prime(uint64_t n);

/// Classic sieve over 0..limit (primes 2 and 3 included).
class SimpleSieve {
public:
    explicit SimpleSieve(uint64_t limit);
    uint64_t limit() const { return limit_; }
    bool is_prime(uint64_t n) const { return n <= limit_ && flags_[n]; }

private:
    uint64_t limit_;
    std::vector<uint8_t> flags_;
};

/// Pairs (p, p+g), both prime, 5 <= p <= n. Needs sieve limit >= n+g.
uint64_t gap_pairs(const SimpleSieve& sieve, uint64_t g, uint64_t n);

/// Unordered p + q = g with 5 <= p <= q, both prime.
uint64_t goldbach_count(const SimpleSieve& sieve, uint64_t g);

/// Quadruplet-style patterns: indices i <= m with 6i-1, 6i+1, 6(i+shift)-1,
/// 6(i+shift)+1 all prime.
uint64_t twin_pattern_count(const SimpleSieve& sieve, uint64_t shift, uint64_t m);

/// Twin-prime constant 0.6601618..., via a compensated long-double product
/// of 1 - 1/(p-1)^2 over odd primes up to the sieve limit.
long double twin_prime_constant(const SimpleSieve& sieve);

/// Compensated long-double evaluation of prod(1 - alpha/p) over primes
/// 5 <= p <= bound, via Kahan summation of logs.
long double sifting_product_kahan(const SimpleSieve& sieve, int alpha, uint64_t bound);

} // namespace sievelab::oracle
