#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sievelab/sieve.hpp"

namespace sievelab {

/// A finite window of an index sequence with zero-annihilation semantics:
/// cell value 0 means "sieved out", a nonzero cell carries the index it was
/// drawn from (or a sum/difference of two such after combine()).
class Segment {
public:
    Segment() = default;
    explicit Segment(std::vector<uint64_t> cells) : cells_(std::move(cells)) {}

    uint64_t length() const { return cells_.size(); }
    uint64_t cell(uint64_t j) const { return cells_[j - 1]; } // 1-based
    const std::vector<uint64_t>& cells() const { return cells_; }

    bool operator==(const Segment&) const = default;

private:
    std::vector<uint64_t> cells_;
};

enum class SegmentSource : uint8_t { L, R, T };
enum class Direction : uint8_t { direct, inverse };

struct SegmentSpec {
    SegmentSource source;
    uint64_t length;
    uint64_t shift = 0;                     // drop this many leading terms
    Direction direction = Direction::direct; // inverse never combines with a shift
};

/// Materialize a window of the L (class A) or R (class B) index sequence.
/// Direct: cell j = j+shift if that index is flagged, else 0.
/// Inverse: cell j = length-j+1 if flagged, else 0 (shift must be 0).
Segment take(const PrimeFlags& flags, const SegmentSpec& spec);

/// Same for the twin sequence T.
Segment take(const TwinFlags& twin, const SegmentSpec& spec);

enum class CombineOp : uint8_t { add, sub };

/// Cell-wise add/subtract where either zero parent annihilates the result.
Segment combine(const Segment& s1, const Segment& s2, CombineOp op);

uint64_t count_nonzero(const Segment& s);

/// "(1, 2, 3, 0, 5, ...)" with zeros explicit.
std::string format_segment(const Segment& s);

/// Map an index-valued segment to its prime-valued form via term().
Segment to_values(const Segment& s, WheelClass klass);

/// The index-residue classes (mod p) that a prime annihilates in the
/// difference construction for an even number g, one Family per summand
/// segment pair (one family unless 3 | g, which uses two). The degenerate
/// flag marks the two progressions coinciding, which happens exactly when
/// p divides g.
struct SiftClasses {
    uint64_t p = 0;
    uint64_t g = 0;
    struct Family {
        uint64_t res_low;  // residue clearing the unshifted segment
        uint64_t res_high; // residue clearing the shifted segment
        bool degenerate;   // res_low == res_high (mod p)
    };
    std::vector<Family> families;
};

SiftClasses combined_sift_classes(uint64_t p, uint64_t g);

} // namespace sievelab
