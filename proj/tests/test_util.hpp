#pragma once

#include "sievelab/oracle.hpp"
#include "sievelab/sieve.hpp"

namespace sievelab::testing {

// Shared fixtures, built once per test binary.
inline const PrimeFlags& flags_1e4() {
    static const PrimeFlags flags = build_flags(10'000);
    return flags;
}

inline const TwinFlags& twin_1e4() {
    static const TwinFlags twin = twin_flags(flags_1e4());
    return twin;
}

inline const PrimeFlags& flags_1e6_values() {
    static const PrimeFlags flags = build_flags(166'668);
    return flags;
}

inline const oracle::SimpleSieve& simple_sieve_1e5() {
    static const oracle::SimpleSieve sieve(100'000);
    return sieve;
}

} // namespace sievelab::testing
