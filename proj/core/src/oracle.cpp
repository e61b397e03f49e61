#include "sievelab/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace sievelab::oracle {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

SimpleSieve::SimpleSieve(uint64_t limit) : limit_(limit), flags_(limit + 1, 1) {
    flags_[0] = 0;
    if (limit >= 1) flags_[1] = 0;
    for (uint64_t p = 2; p * p <= limit; ++p) {
        if (!flags_[p]) continue;
        for (uint64_t q = p * p; q <= limit; q += p) flags_[q] = 0;
    }
}

uint64_t gap_pairs(const SimpleSieve& sieve, uint64_t g, uint64_t n) {
    if (n + g > sieve.limit()) throw std::out_of_range("oracle::gap_pairs: sieve too small");
    uint64_t count = 0;
    for (uint64_t p = 5; p <= n; ++p)
        if (sieve.is_prime(p) && sieve.is_prime(p + g)) ++count;
    return count;
}

uint64_t goldbach_count(const SimpleSieve& sieve, uint64_t g) {
    if (g > sieve.limit()) throw std::out_of_range("oracle::goldbach_count: sieve too small");
    uint64_t count = 0;
    for (uint64_t p = 5; 2 * p <= g; ++p)
        if (sieve.is_prime(p) && g - p >= 5 && sieve.is_prime(g - p)) ++count;
    return count;
}

uint64_t twin_pattern_count(const SimpleSieve& sieve, uint64_t shift, uint64_t m) {
    if (6 * (m + shift) + 1 > sieve.limit())
        throw std::out_of_range("oracle::twin_pattern_count: sieve too small");
    uint64_t count = 0;
    for (uint64_t i = 1; i <= m; ++i) {
        if (sieve.is_prime(6 * i - 1) && sieve.is_prime(6 * i + 1) &&
            sieve.is_prime(6 * (i + shift) - 1) && sieve.is_prime(6 * (i + shift) + 1))
            ++count;
    }
    return count;
}

namespace {

struct KahanAccumulator {
    long double sum = 0.0L;
    long double carry = 0.0L;
    void add(long double x) {
        const long double y = x - carry;
        const long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

} // namespace

long double twin_prime_constant(const SimpleSieve& sieve) {
    KahanAccumulator acc;
    for (uint64_t p = 3; p <= sieve.limit(); p += 2) {
        if (!sieve.is_prime(p)) continue;
        const long double q = static_cast<long double>(p) - 1.0L;
        acc.add(std::log1p(-1.0L / (q * q)));
    }
    return std::exp(acc.sum);
}

long double sifting_product_kahan(const SimpleSieve& sieve, int alpha, uint64_t bound) {
    if (bound > sieve.limit())
        throw std::out_of_range("oracle::sifting_product_kahan: sieve too small");
    KahanAccumulator acc;
    for (uint64_t p = 5; p <= bound; p += 2) {
        if (!sieve.is_prime(p)) continue;
        acc.add(std::log1p(-static_cast<long double>(alpha) / static_cast<long double>(p)));
    }
    return std::exp(acc.sum);
}

} // namespace sievelab::oracle
