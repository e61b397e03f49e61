#include "sievelab/wheel.hpp"

#include <limits>
#include <stdexcept>

namespace sievelab {

namespace {

constexpr uint64_t kMaxIndex = (std::numeric_limits<uint64_t>::max() - 1) / 6;

bool small_is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

} // namespace

uint64_t term(WheelClass klass, uint64_t i) {
    if (i == 0) throw std::domain_error("term: index must be positive");
    if (i > kMaxIndex) throw std::overflow_error("term: 6i+1 overflows 64 bits");
    return klass == WheelClass::A ? 6 * i - 1 : 6 * i + 1;
}

uint64_t even_value(EvenKlass klass, uint64_t m) {
    if (m == 0) throw std::domain_error("even_value: m must be positive");
    if (m > kMaxIndex - 1) throw std::overflow_error("even_value: 6m+2 overflows 64 bits");
    switch (klass) {
        case EvenKlass::G1: return 6 * m - 2;
        case EvenKlass::G2: return 6 * m;
        case EvenKlass::G3: return 6 * m + 2;
    }
    throw std::domain_error("even_value: bad class");
}

EvenClass classify_even(uint64_t g) {
    if (g < 4 || g % 2 != 0)
        throw std::domain_error("classify_even: need an even number >= 4");
    switch (g % 6) {
        case 4: return {EvenKlass::G1, (g + 2) / 6};
        case 0: return {EvenKlass::G2, g / 6};
        case 2: return {EvenKlass::G3, (g - 2) / 6};
    }
    throw std::domain_error("classify_even: unreachable");
}

std::array<ProgressionDescriptor, 2> composite_progressions(uint64_t p) {
    if (p < 5 || !small_is_prime(p))
        throw std::domain_error("composite_progressions: p must be a prime >= 5");

    if (p % 6 == 5) {
        // p = 6j-1: divides 6i-1 at i = +j (mod p), divides 6i+1 at i = -j.
        const uint64_t j = (p + 1) / 6;
        return {ProgressionDescriptor{WheelClass::A, j, p, SignForm::plus},
                ProgressionDescriptor{WheelClass::B, p - j, p, SignForm::minus}};
    }
    // p = 6k+1: divides 6i-1 at i = -k (mod p), divides 6i+1 at i = +k.
    const uint64_t k = (p - 1) / 6;
    return {ProgressionDescriptor{WheelClass::A, p - k, p, SignForm::minus},
            ProgressionDescriptor{WheelClass::B, k, p, SignForm::plus}};
}

uint64_t self_index(uint64_t p, WheelClass klass) {
    if (klass == WheelClass::A) return p % 6 == 5 ? (p + 1) / 6 : 0;
    return p % 6 == 1 ? (p - 1) / 6 : 0;
}

} // namespace sievelab
