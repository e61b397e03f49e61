#include "sievelab/counting.hpp"

#include <stdexcept>

namespace sievelab {

std::string to_string(GapConstruction c) {
    switch (c) {
        case GapConstruction::AshiftMinusB: return "AshiftMinusB";
        case GapConstruction::AA_plus_BB: return "AA_plus_BB";
        case GapConstruction::BshiftMinusA: return "BshiftMinusA";
        case GapConstruction::TwinDirect: return "TwinDirect";
    }
    return "?";
}

namespace {

// Largest index whose class-A term stays <= n.
uint64_t a_index_bound(uint64_t n) { return (n + 1) / 6; }
// Same for class B.
uint64_t b_index_bound(uint64_t n) { return n >= 1 ? (n - 1) / 6 : 0; }

} // namespace

uint64_t count_primes(const PrimeFlags& flags, WheelClass klass, uint64_t n) {
    const uint64_t i_max =
        klass == WheelClass::A ? a_index_bound(n) : b_index_bound(n);
    if (i_max > flags.m_max())
        throw std::out_of_range("count_primes: n beyond sieve range");
    return flags.klass(klass).count_prefix(i_max);
}

GapCount count_gap_pairs(const PrimeFlags& flags, uint64_t g, uint64_t n) {
    if (g < 2 || g % 2 != 0)
        throw std::domain_error("count_gap_pairs: g must be even and >= 2");

    const Bitmap& a = flags.a();
    const Bitmap& b = flags.b();
    const uint64_t m_max = flags.m_max();

    auto window = [&](const Bitmap& hi_bits, const Bitmap& lo_bits, uint64_t shift,
                      uint64_t i_max) -> uint64_t {
        if (i_max == 0) return 0;
        if (i_max + shift > m_max)
            throw std::out_of_range("count_gap_pairs: window beyond sieve range");
        return Bitmap::count_and_shifted(hi_bits, lo_bits, shift, 1, i_max);
    };

    if (g == 2)
        return {g, n, window(b, a, 0, a_index_bound(n)), GapConstruction::TwinDirect};

    const EvenClass ec = classify_even(g);
    switch (ec.klass) {
        case EvenKlass::G1: // pairs (b_i, a_{i+m'}), smaller prime in class B
            return {g, n, window(a, b, ec.m, b_index_bound(n)),
                    GapConstruction::AshiftMinusB};
        case EvenKlass::G2: // pairs within each class, summed
            return {g, n,
                    window(a, a, ec.m, a_index_bound(n)) +
                        window(b, b, ec.m, b_index_bound(n)),
                    GapConstruction::AA_plus_BB};
        case EvenKlass::G3: // pairs (a_i, b_{i+m'}), smaller prime in class A
            return {g, n, window(b, a, ec.m, a_index_bound(n)),
                    GapConstruction::BshiftMinusA};
    }
    throw std::domain_error("count_gap_pairs: unreachable");
}

GoldbachCount count_goldbach(const PrimeFlags& flags, uint64_t g) {
    if (g % 2 != 0 || g < 10)
        throw std::domain_error("count_goldbach: defined for even g >= 10");
    const EvenClass ec = classify_even(g);
    const uint64_t m = ec.m;
    if (m - 1 > flags.m_max())
        throw std::out_of_range("count_goldbach: g beyond sieve range");

    if (ec.klass == EvenKlass::G2) {
        // g = a_i + b_{m-i}; every representation appears exactly once.
        uint64_t count = 0;
        for (uint64_t i = 1; i <= m - 1; ++i)
            if (flags.a_bit(i) && flags.b_bit(m - i)) ++count;
        return {g, count, static_cast<double>(count)};
    }

    // Symmetric classes: g = a_i + a_{m-i} (G1) or b_i + b_{m-i} (G3).
    const Bitmap& bits = ec.klass == EvenKlass::G1 ? flags.a() : flags.b();
    uint64_t pairs = 0;
    for (uint64_t i = 1; 2 * i < m; ++i)
        if (bits.test(i) && bits.test(m - i)) ++pairs;
    const uint64_t center = (m % 2 == 0 && bits.test(m / 2)) ? 1 : 0;
    return {g, pairs + center, (2.0 * pairs + center) / 2.0};
}

TwinPatternCount count_twin_patterns(const TwinFlags& twin, uint64_t shift, uint64_t m) {
    if (m == 0) throw std::domain_error("count_twin_patterns: m must be positive");
    if (m + shift > twin.m_max())
        throw std::out_of_range("count_twin_patterns: window beyond sieve range");
    return {shift, m, Bitmap::count_and_shifted(twin.t(), twin.t(), shift, 1, m)};
}

uint64_t count_twin_goldbach(const TwinFlags& twin, uint64_t m) {
    if (m == 0) throw std::domain_error("count_twin_goldbach: m must be positive");
    if (m > twin.m_max())
        throw std::out_of_range("count_twin_goldbach: m beyond sieve range");
    uint64_t count = 0;
    for (uint64_t i = 1; 2 * i <= m; ++i)
        if (twin.t_bit(i) && twin.t_bit(m - i)) ++count;
    return count;
}

std::vector<uint64_t> find_twin_goldbach_exceptions(const TwinFlags& twin, uint64_t limit) {
    if (limit >= twin.m_max())
        throw std::out_of_range("find_twin_goldbach_exceptions: limit must stay below m_max");

    std::vector<uint64_t> twins;
    for (uint64_t i = 1; i <= limit; ++i)
        if (twin.t_bit(i)) twins.push_back(i);

    std::vector<uint64_t> exceptions;
    for (uint64_t m = 1; m <= limit; ++m) {
        bool found = false;
        for (uint64_t i : twins) {
            if (2 * i > m) break;
            if (twin.t_bit(m - i)) {
                found = true;
                break;
            }
        }
        if (!found) exceptions.push_back(m);
    }
    return exceptions;
}

} // namespace sievelab
