#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "sievelab/oracle.hpp"
#include "sievelab/sieve.hpp"
#include "test_util.hpp"

using namespace sievelab;
using sievelab::testing::flags_1e4;
using sievelab::testing::simple_sieve_1e5;
using sievelab::testing::twin_1e4;

TEST_CASE("first seventeen indices match the worked listings") {
    const PrimeFlags flags = build_flags(17);
    const std::set<uint64_t> a_zero = {6, 11, 13, 16};
    const std::set<uint64_t> b_zero = {4, 8, 9, 14, 15};
    for (uint64_t i = 1; i <= 17; ++i) {
        CHECK(flags.a_bit(i) == !a_zero.count(i));
        CHECK(flags.b_bit(i) == !b_zero.count(i));
    }
}

TEST_CASE("m_max = 1 keeps both 5 and 7") {
    const PrimeFlags flags = build_flags(1);
    CHECK(flags.a_bit(1));
    CHECK(flags.b_bit(1));
}

TEST_CASE("capacity guard") {
    CHECK_THROWS_AS((void)build_flags(~uint64_t{0} / 3), std::overflow_error);
    CHECK_THROWS_AS((void)build_flags(0), std::domain_error);
}

TEST_CASE("bitmaps agree with trial division up to 10^4 indices") {
    const PrimeFlags& flags = flags_1e4();
    for (uint64_t i = 1; i <= flags.m_max(); ++i) {
        CHECK(flags.a_bit(i) == oracle::is_prime(6 * i - 1));
        CHECK(flags.b_bit(i) == oracle::is_prime(6 * i + 1));
    }
}

TEST_CASE("set bits enumerate exactly the primes in [5, 6m+1]") {
    const PrimeFlags& flags = flags_1e4();
    const auto primes = primes_upto(flags, 6 * flags.m_max() + 1);
    uint64_t k = 0;
    for (uint64_t v = 5; v <= 6 * flags.m_max() + 1; ++v) {
        if (simple_sieve_1e5().is_prime(v)) {
            REQUIRE(k < primes.size());
            CHECK(primes[k] == v);
            ++k;
        }
    }
    CHECK(k == primes.size());
}

TEST_CASE("results do not depend on block size or thread count") {
    const PrimeFlags base = build_flags(40'000);
    for (uint64_t block : {uint64_t{64}, uint64_t{100}, uint64_t{1024}, uint64_t{1} << 20}) {
        for (unsigned threads : {1u, 4u}) {
            const PrimeFlags other = build_flags(40'000, {.block_indices = block, .threads = threads});
            CHECK(other.a() == base.a());
            CHECK(other.b() == base.b());
        }
    }
}

TEST_CASE("twin bitmap is the AND of the class bitmaps") {
    const PrimeFlags flags = build_flags(25);
    const TwinFlags twin = twin_flags(flags);
    const std::set<uint64_t> expect = {1, 2, 3, 5, 7, 10, 12, 17, 18, 23, 25};
    for (uint64_t i = 1; i <= 25; ++i) CHECK(twin.t_bit(i) == (expect.count(i) != 0));

    const TwinFlags one = twin_flags(build_flags(1));
    CHECK(one.t_bit(1)); // the pair (5, 7)
}

TEST_CASE("twin popcount matches brute force at 10^4 indices") {
    uint64_t brute = 0;
    for (uint64_t i = 1; i <= 10'000; ++i)
        brute += oracle::is_prime(6 * i - 1) && oracle::is_prime(6 * i + 1) ? 1 : 0;
    CHECK(twin_1e4().t().count() == brute);
    CHECK(twin_1e4().t().count() == 810);
}

TEST_CASE("well-structured verification on honest and doctored bitmaps") {
    const PrimeFlags flags = build_flags(1000);
    CHECK(verify_well_structured(flags, 5));
    CHECK(verify_well_structured(flags, 7));
    CHECK(verify_well_structured(flags, 101));
    CHECK_THROWS_AS((void)verify_well_structured(flags, 6 * 1000 + 5), std::domain_error);
    CHECK_THROWS_AS((void)verify_well_structured(flags, 9), std::domain_error);

    // flipping a composite position back on must be caught
    std::stringstream buf;
    save_flags(flags, buf);
    std::string bytes = buf.str();
    bytes[16 + (6 - 1) / 8] |= char(1 << ((6 - 1) % 8)); // a_6 = 35 = 5 * 7
    std::stringstream doctored_buf(bytes);
    const PrimeFlags doctored = load_flags(doctored_buf);
    CHECK_FALSE(verify_well_structured(doctored, 5));
}

TEST_CASE("double-sieve verification: two residue classes per prime") {
    const PrimeFlags flags = build_flags(1000);
    const TwinFlags twin = twin_flags(flags);
    CHECK(verify_double_sieve(twin, 5));
    CHECK(verify_double_sieve(twin, 7));
    CHECK(verify_double_sieve(twin, 13));
    for (uint64_t p : primes_upto(flags, 997)) CHECK(verify_double_sieve(twin, p));

    Bitmap doctored_bits = twin.t();
    doctored_bits.set(4); // 23 and 25 are not both prime
    const TwinFlags doctored = twin_flags_from_bitmap(twin.m_max(), std::move(doctored_bits));
    CHECK_FALSE(verify_double_sieve(doctored, 5));
}

TEST_CASE("each prime clears close to 2/q of the twin indices") {
    const uint64_t m = twin_1e4().m_max();
    for (uint64_t q : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 97}) {
        const auto descs = composite_progressions(q);
        const uint64_t ra = descs[0].first_index % q;
        const uint64_t rb = descs[1].first_index % q;
        uint64_t cleared = 0;
        for (uint64_t i = 1; i <= m; ++i)
            cleared += (i % q == ra || i % q == rb) ? 1 : 0;
        const int64_t anchor = 2 * static_cast<int64_t>(m / q) + 2;
        CHECK(std::abs(static_cast<int64_t>(cleared) - anchor) <= 2);
    }
}

TEST_CASE("save/load round trip and header layout") {
    const PrimeFlags flags = build_flags(123);
    std::stringstream buf;
    save_flags(flags, buf);
    const std::string bytes = buf.str();
    REQUIRE(bytes.size() == 16 + 2 * ((123 + 7) / 8));
    CHECK(bytes.substr(0, 4) == "SVL1");
    CHECK(bytes[4] == 0);
    CHECK(bytes[8] == 123); // little-endian m_max
    CHECK(bytes[9] == 0);

    const PrimeFlags again = load_flags(buf);
    CHECK(again.m_max() == flags.m_max());
    CHECK(again.a() == flags.a());
    CHECK(again.b() == flags.b());
}

TEST_CASE("load rejects garbage") {
    std::stringstream bad("not a sieve file at all");
    CHECK_THROWS_AS((void)load_flags(bad), std::runtime_error);
    std::stringstream truncated("SVL1");
    CHECK_THROWS_AS((void)load_flags(truncated), std::runtime_error);
}
