#include "sievelab/bitmap.hpp"

#include <bit>
#include <stdexcept>

namespace sievelab {

Bitmap::Bitmap(uint64_t size, bool fill) : size_(size), words_((size + 63) / 64, 0) {
    if (fill) {
        for (auto& w : words_) w = ~uint64_t{0};
        trim();
    }
}

void Bitmap::trim() {
    const uint64_t tail = size_ & 63;
    if (tail != 0 && !words_.empty())
        words_.back() &= (uint64_t{1} << tail) - 1;
}

uint64_t Bitmap::count() const {
    uint64_t n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
}

uint64_t Bitmap::count_prefix(uint64_t hi) const {
    if (hi == 0) return 0;
    if (hi > size_) throw std::out_of_range("Bitmap::count_prefix: hi beyond size");
    const uint64_t full = hi / 64;
    uint64_t n = 0;
    for (uint64_t w = 0; w < full; ++w) n += std::popcount(words_[w]);
    const uint64_t tail = hi & 63;
    if (tail != 0)
        n += std::popcount(words_[full] & ((uint64_t{1} << tail) - 1));
    return n;
}

uint64_t Bitmap::count_range(uint64_t lo, uint64_t hi) const {
    if (hi < lo) return 0;
    return count_prefix(hi) - (lo > 1 ? count_prefix(lo - 1) : 0);
}

uint64_t Bitmap::fetch64(uint64_t off) const {
    const uint64_t q = off >> 6;
    const uint64_t r = off & 63;
    if (q >= words_.size()) return 0;
    uint64_t w = words_[q] >> r;
    if (r != 0 && q + 1 < words_.size())
        w |= words_[q + 1] << (64 - r);
    return w;
}

uint64_t Bitmap::count_and_shifted(const Bitmap& x, const Bitmap& y,
                                   uint64_t shift, uint64_t lo, uint64_t hi) {
    if (hi < lo || hi == 0) return 0;
    if (hi > y.size_ || hi + shift > x.size_)
        throw std::out_of_range("Bitmap::count_and_shifted: window beyond size");

    const uint64_t first_word = (lo - 1) >> 6;
    const uint64_t last_word = (hi - 1) >> 6;
    uint64_t n = 0;
    for (uint64_t w = first_word; w <= last_word; ++w) {
        uint64_t yy = y.words_[w];
        if (w == first_word) {
            const uint64_t drop = (lo - 1) & 63;
            yy &= ~uint64_t{0} << drop;
        }
        if (w == last_word) {
            const uint64_t keep = ((hi - 1) & 63) + 1;
            if (keep < 64) yy &= (uint64_t{1} << keep) - 1;
        }
        if (yy == 0) continue;
        n += std::popcount(yy & x.fetch64(w * 64 + shift));
    }
    return n;
}

void Bitmap::or_shifted(Bitmap& dst, const Bitmap& src, uint64_t shift, uint64_t limit) {
    if (limit > dst.size_) throw std::out_of_range("Bitmap::or_shifted: limit beyond dst");
    if (shift >= limit) return;
    const uint64_t src_hi = limit - shift; // largest src index that can land within limit
    const uint64_t nwords = (std::min(src_hi, src.size_) + 63) / 64;
    for (uint64_t sw = 0; sw < nwords; ++sw) {
        uint64_t w = src.words_[sw];
        if (sw == nwords - 1) {
            const uint64_t keep = std::min(src_hi, src.size_) - sw * 64;
            if (keep < 64) w &= (uint64_t{1} << keep) - 1;
        }
        if (w == 0) continue;
        const uint64_t pos = sw * 64 + shift;
        const uint64_t q = pos >> 6;
        const uint64_t r = pos & 63;
        dst.words_[q] |= w << r;
        if (r != 0 && q + 1 < dst.words_.size())
            dst.words_[q + 1] |= w >> (64 - r);
    }
}

} // namespace sievelab
