#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sievelab/bitmap.hpp"

using sievelab::Bitmap;

TEST_CASE("set/test/clear round trip") {
    Bitmap b(200);
    CHECK(b.count() == 0);
    b.set(1);
    b.set(64);
    b.set(65);
    b.set(200);
    CHECK(b.test(1));
    CHECK(b.test(64));
    CHECK(b.test(65));
    CHECK(b.test(200));
    CHECK_FALSE(b.test(2));
    CHECK(b.count() == 4);
    b.clear(64);
    CHECK_FALSE(b.test(64));
    CHECK(b.count() == 3);
}

TEST_CASE("prefix and range counts agree with a naive loop") {
    std::mt19937_64 rng(7);
    Bitmap b(517);
    std::vector<bool> ref(518, false);
    for (int k = 0; k < 200; ++k) {
        const uint64_t i = rng() % 517 + 1;
        b.set(i);
        ref[i] = true;
    }
    for (uint64_t hi : {uint64_t{0}, uint64_t{1}, uint64_t{63}, uint64_t{64}, uint64_t{65},
                        uint64_t{128}, uint64_t{517}}) {
        uint64_t expect = 0;
        for (uint64_t i = 1; i <= hi; ++i) expect += ref[i];
        CHECK(b.count_prefix(hi) == expect);
    }
    CHECK(b.count_range(100, 99) == 0);
    uint64_t expect = 0;
    for (uint64_t i = 130; i <= 400; ++i) expect += ref[i];
    CHECK(b.count_range(130, 400) == expect);
}

TEST_CASE("count_and_shifted equals the naive overlap count") {
    std::mt19937_64 rng(13);
    Bitmap x(700), y(700);
    std::vector<bool> rx(701, false), ry(701, false);
    for (int k = 0; k < 300; ++k) {
        uint64_t i = rng() % 700 + 1;
        x.set(i);
        rx[i] = true;
        i = rng() % 700 + 1;
        y.set(i);
        ry[i] = true;
    }
    for (uint64_t shift : {uint64_t{0}, uint64_t{1}, uint64_t{5}, uint64_t{63}, uint64_t{64},
                           uint64_t{100}}) {
        for (uint64_t lo : {uint64_t{1}, uint64_t{2}, uint64_t{64}, uint64_t{65}}) {
            const uint64_t hi = 700 - shift;
            uint64_t expect = 0;
            for (uint64_t i = lo; i <= hi; ++i) expect += ry[i] && rx[i + shift];
            CHECK(Bitmap::count_and_shifted(x, y, shift, lo, hi) == expect);
        }
    }
}

TEST_CASE("count_and_shifted rejects windows beyond either operand") {
    Bitmap x(100), y(100);
    CHECK_THROWS_AS((void)Bitmap::count_and_shifted(x, y, 50, 1, 60), std::out_of_range);
    CHECK_THROWS_AS((void)Bitmap::count_and_shifted(x, y, 0, 1, 101), std::out_of_range);
    CHECK(Bitmap::count_and_shifted(x, y, 0, 5, 4) == 0); // empty window is fine
}

TEST_CASE("or_shifted matches the naive shifted union") {
    std::mt19937_64 rng(99);
    Bitmap src(300);
    std::vector<bool> ref(301, false);
    for (int k = 0; k < 80; ++k) {
        const uint64_t i = rng() % 300 + 1;
        src.set(i);
        ref[i] = true;
    }
    for (uint64_t shift : {uint64_t{1}, uint64_t{2}, uint64_t{64}, uint64_t{77}, uint64_t{299},
                           uint64_t{300}}) {
        Bitmap dst(300);
        Bitmap::or_shifted(dst, src, shift, 300);
        for (uint64_t v = 1; v <= 300; ++v) {
            const bool expect = v > shift && v - shift <= 300 && ref[v - shift];
            CHECK(dst.test(v) == expect);
        }
    }
}
