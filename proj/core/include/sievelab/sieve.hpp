#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sievelab/bitmap.hpp"
#include "sievelab/wheel.hpp"

namespace sievelab {

#ifndef SIEVELAB_DEFAULT_BLOCK_INDICES
#define SIEVELAB_DEFAULT_BLOCK_INDICES 32768
#endif

struct BuildOptions {
    uint64_t block_indices = SIEVELAB_DEFAULT_BLOCK_INDICES; // rounded up to a word multiple
    unsigned threads = 0;                                    // 0 = hardware concurrency
};

/// Primality indicators for both wheel classes up to an index bound:
/// bit i of a() set iff 6i-1 is prime, bit i of b() set iff 6i+1 is prime.
/// Immutable once built.
class PrimeFlags {
public:
    uint64_t m_max() const { return m_max_; }
    const Bitmap& a() const { return a_; }
    const Bitmap& b() const { return b_; }
    bool a_bit(uint64_t i) const { return a_.test(i); }
    bool b_bit(uint64_t i) const { return b_.test(i); }

    const Bitmap& klass(WheelClass k) const { return k == WheelClass::A ? a_ : b_; }

private:
    PrimeFlags(uint64_t m_max, Bitmap a, Bitmap b)
        : m_max_(m_max), a_(std::move(a)), b_(std::move(b)) {}

    uint64_t m_max_ = 0;
    Bitmap a_, b_;

    friend PrimeFlags build_flags(uint64_t, const BuildOptions&);
    friend PrimeFlags load_flags(std::istream&);
};

/// Twin indicator: bit i set iff both 6i-1 and 6i+1 are prime.
class TwinFlags {
public:
    uint64_t m_max() const { return m_max_; }
    const Bitmap& t() const { return t_; }
    bool t_bit(uint64_t i) const { return t_.test(i); }

private:
    TwinFlags(uint64_t m_max, Bitmap t) : m_max_(m_max), t_(std::move(t)) {}

    uint64_t m_max_ = 0;
    Bitmap t_;

    friend TwinFlags twin_flags(const PrimeFlags&);
    friend TwinFlags twin_flags_from_bitmap(uint64_t, Bitmap);
};

/// Build both bitmaps by clearing the composite progressions of every base
/// prime p <= sqrt(6*m_max+1), block by block. Never uses trial division.
PrimeFlags build_flags(uint64_t m_max, const BuildOptions& opts = {});

/// Bitwise AND of the two class bitmaps.
TwinFlags twin_flags(const PrimeFlags& flags);

/// Test-support constructor from a raw bitmap (e.g. deserialized data).
TwinFlags twin_flags_from_bitmap(uint64_t m_max, Bitmap t);

/// Check that, within each class, the indices whose terms p divides form
/// exactly the progression composite_progressions(p) predicts, and that the
/// flags are cleared at every such index other than p's own.
bool verify_well_structured(const PrimeFlags& flags, uint64_t p);

/// Check that the twin-bitmap positions p annihilates form exactly two
/// disjoint residue classes mod p (the double-sieve property).
bool verify_double_sieve(const TwinFlags& twin, uint64_t p);

/// Ascending primes in [5, bound] read off the bitmaps.
std::vector<uint64_t> primes_upto(const PrimeFlags& flags, uint64_t bound);

/// Flat binary format: 16-byte header (magic "SVL1", u32 reserved = 0,
/// little-endian u64 m_max), then ceil(m_max/8) bytes for each bitmap,
/// class A first, packed LSB-first.
void save_flags(const PrimeFlags& flags, std::ostream& out);
PrimeFlags load_flags(std::istream& in);

} // namespace sievelab
