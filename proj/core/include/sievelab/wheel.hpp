#pragma once

#include <array>
#include <cstdint>

namespace sievelab {

/// The two residue classes mod 6 that carry every prime above 3:
/// class A holds 6i-1, class B holds 6i+1.
enum class WheelClass : uint8_t { A, B };

/// The i-th term of a wheel class, 6i-1 or 6i+1. Indices are 1-based.
uint64_t term(WheelClass klass, uint64_t i);

enum class EvenKlass : uint8_t { G1, G2, G3 };

/// Even numbers >= 4 split into three residue classes mod 6:
/// G1 = 6m-2, G2 = 6m, G3 = 6m+2, each with a positive parameter m.
struct EvenClass {
    EvenKlass klass;
    uint64_t m;
    bool operator==(const EvenClass&) const = default;
};

uint64_t even_value(EvenKlass klass, uint64_t m);
EvenClass classify_even(uint64_t g);

enum class SignForm : uint8_t { plus, minus };

/// One arithmetic progression of indices whose wheel terms a prime divides:
/// p | term(target, i) exactly when i == first_index (mod common_difference).
struct ProgressionDescriptor {
    WheelClass target;
    uint64_t first_index;       // canonical residue, in [1, common_difference]
    uint64_t common_difference; // the sieving prime p
    SignForm sign_form;         // whether the residue came from +j/+k or -j/-k
};

/// The two index progressions a prime p >= 5 clears, one per wheel class.
/// Writing p = 6j-1: the A progression is i = +j (mod p), the B one is i = -j;
/// for p = 6k+1 the signs swap between the classes.
std::array<ProgressionDescriptor, 2> composite_progressions(uint64_t p);

/// Index of p itself within its own class (0 when i would not be integral).
uint64_t self_index(uint64_t p, WheelClass klass);

} // namespace sievelab
