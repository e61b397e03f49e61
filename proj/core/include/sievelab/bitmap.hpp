#pragma once

#include <cstdint>
#include <vector>

namespace sievelab {

/// Fixed-size bit vector addressed by 1-based indices 1..size().
/// Index i lives at word (i-1)/64, bit (i-1)%64, so a little-endian byte
/// dump of the words is an LSB-first packing of index 1 upward.
class Bitmap {
public:
    Bitmap() = default;
    explicit Bitmap(uint64_t size, bool fill = false);

    uint64_t size() const { return size_; }

    bool test(uint64_t i) const {
        return (words_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1u;
    }
    void set(uint64_t i) { words_[(i - 1) >> 6] |= uint64_t{1} << ((i - 1) & 63); }
    void clear(uint64_t i) { words_[(i - 1) >> 6] &= ~(uint64_t{1} << ((i - 1) & 63)); }

    /// Population count over indices [1, size()].
    uint64_t count() const;
    /// Population count over indices [1, hi]; hi may be 0 (empty) but at most size().
    uint64_t count_prefix(uint64_t hi) const;
    /// Population count over indices [lo, hi]; empty if hi < lo.
    uint64_t count_range(uint64_t lo, uint64_t hi) const;

    /// Sum over i in [lo, hi] of y.test(i) & x.test(i + shift).
    /// Requires hi + shift <= x.size() and hi <= y.size() when the range is nonempty.
    static uint64_t count_and_shifted(const Bitmap& x, const Bitmap& y,
                                      uint64_t shift, uint64_t lo, uint64_t hi);

    /// dst[i + shift] |= src[i], truncated to dst indices <= limit.
    static void or_shifted(Bitmap& dst, const Bitmap& src, uint64_t shift, uint64_t limit);

    bool operator==(const Bitmap& other) const = default;

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

    /// Zero any bits beyond size() (call after raw word manipulation).
    void trim();

private:
    uint64_t size_ = 0;
    std::vector<uint64_t> words_;

    // 64 bits of the logical bit stream starting at 0-based bit offset `off`.
    uint64_t fetch64(uint64_t off) const;
};

} // namespace sievelab
