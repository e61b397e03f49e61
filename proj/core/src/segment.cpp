#include "sievelab/segment.hpp"

#include <stdexcept>

namespace sievelab {

namespace {

Segment take_from_bitmap(const Bitmap& bits, uint64_t m_max, const SegmentSpec& spec) {
    if (spec.length == 0) throw std::domain_error("take: length must be positive");
    if (spec.direction == Direction::inverse && spec.shift != 0)
        throw std::invalid_argument("take: inverse segments do not shift");
    if (spec.shift + spec.length > m_max)
        throw std::out_of_range("take: window beyond sieve range");

    std::vector<uint64_t> cells(spec.length, 0);
    if (spec.direction == Direction::direct) {
        for (uint64_t j = 1; j <= spec.length; ++j) {
            const uint64_t i = j + spec.shift;
            if (bits.test(i)) cells[j - 1] = i;
        }
    } else {
        for (uint64_t j = 1; j <= spec.length; ++j) {
            const uint64_t i = spec.length - j + 1;
            if (bits.test(i)) cells[j - 1] = i;
        }
    }
    return Segment(std::move(cells));
}

} // namespace

Segment take(const PrimeFlags& flags, const SegmentSpec& spec) {
    switch (spec.source) {
        case SegmentSource::L: return take_from_bitmap(flags.a(), flags.m_max(), spec);
        case SegmentSource::R: return take_from_bitmap(flags.b(), flags.m_max(), spec);
        case SegmentSource::T:
            throw std::invalid_argument("take: source T needs TwinFlags");
    }
    throw std::invalid_argument("take: bad source");
}

Segment take(const TwinFlags& twin, const SegmentSpec& spec) {
    if (spec.source != SegmentSource::T)
        throw std::invalid_argument("take: TwinFlags only provides source T");
    return take_from_bitmap(twin.t(), twin.m_max(), spec);
}

Segment combine(const Segment& s1, const Segment& s2, CombineOp op) {
    if (s1.length() != s2.length())
        throw std::invalid_argument("combine: segment lengths differ");
    std::vector<uint64_t> cells(s1.length(), 0);
    for (uint64_t j = 0; j < s1.length(); ++j) {
        const uint64_t x = s1.cells()[j];
        const uint64_t y = s2.cells()[j];
        if (x == 0 || y == 0) continue;
        if (op == CombineOp::add) {
            cells[j] = x + y;
        } else {
            if (x < y) throw std::domain_error("combine: subtraction went negative");
            cells[j] = x - y;
        }
    }
    return Segment(std::move(cells));
}

uint64_t count_nonzero(const Segment& s) {
    uint64_t n = 0;
    for (uint64_t c : s.cells())
        if (c != 0) ++n;
    return n;
}

std::string format_segment(const Segment& s) {
    std::string out = "(";
    for (uint64_t j = 0; j < s.length(); ++j) {
        if (j != 0) out += ", ";
        out += std::to_string(s.cells()[j]);
    }
    out += ")";
    return out;
}

Segment to_values(const Segment& s, WheelClass klass) {
    std::vector<uint64_t> cells(s.length(), 0);
    for (uint64_t j = 0; j < s.length(); ++j) {
        if (s.cells()[j] != 0) cells[j] = term(klass, s.cells()[j]);
    }
    return Segment(std::move(cells));
}

SiftClasses combined_sift_classes(uint64_t p, uint64_t g) {
    if (g < 2 || g % 2 != 0)
        throw std::domain_error("combined_sift_classes: need an even g >= 2");
    const auto descs = composite_progressions(p); // validates p
    const uint64_t res_a = descs[0].first_index % p;
    const uint64_t res_b = descs[1].first_index % p;

    // shift s.t. the construction pairs index i with index i + shift
    uint64_t shift = 0;
    SiftClasses out{p, g, {}};
    auto push = [&](uint64_t unshifted_res, uint64_t shifted_res) {
        const uint64_t lo = unshifted_res % p;
        const uint64_t hi = (shifted_res + p - shift % p) % p;
        out.families.push_back({lo, hi, lo == hi});
    };

    if (g == 2) {
        // twin pairs: b_i - a_i, no shift
        out.families.push_back({res_a, res_b, res_a == res_b});
        return out;
    }
    const EvenClass ec = classify_even(g);
    switch (ec.klass) {
        case EvenKlass::G1: // a_{i+m'} - b_i
            shift = ec.m;
            push(res_b, res_a);
            break;
        case EvenKlass::G3: // b_{i+m'} - a_i
            shift = ec.m;
            push(res_a, res_b);
            break;
        case EvenKlass::G2: // (a_{i+m'} - a_i) and (b_{i+m'} - b_i)
            shift = ec.m;
            push(res_a, res_a);
            push(res_b, res_b);
            break;
    }
    return out;
}

} // namespace sievelab
