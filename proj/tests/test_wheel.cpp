#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "sievelab/oracle.hpp"
#include "sievelab/wheel.hpp"

using namespace sievelab;

TEST_CASE("term values") {
    CHECK(term(WheelClass::A, 1) == 5);
    CHECK(term(WheelClass::B, 1) == 7);
    CHECK(term(WheelClass::A, 6) == 35);
    CHECK(term(WheelClass::B, 4) == 25);
    CHECK_THROWS_AS((void)term(WheelClass::A, 0), std::domain_error);
    CHECK_THROWS_AS((void)term(WheelClass::A, ~uint64_t{0} / 2), std::overflow_error);
}

TEST_CASE("classify_even worked values") {
    CHECK(classify_even(28) == EvenClass{EvenKlass::G1, 5});
    CHECK(classify_even(94) == EvenClass{EvenKlass::G1, 16});
    CHECK(classify_even(6) == EvenClass{EvenKlass::G2, 1});
    CHECK(classify_even(4) == EvenClass{EvenKlass::G1, 1});
    CHECK(classify_even(8) == EvenClass{EvenKlass::G3, 1});
    CHECK_THROWS_AS((void)classify_even(2), std::domain_error);
    CHECK_THROWS_AS((void)classify_even(7), std::domain_error);
}

TEST_CASE("classify_even inverts even_value up to 10^6") {
    for (uint64_t m = 1; m <= 1'000'000; ++m) {
        CHECK(classify_even(even_value(EvenKlass::G1, m)).m == m);
        const EvenClass g2 = classify_even(even_value(EvenKlass::G2, m));
        CHECK(g2.klass == EvenKlass::G2);
        CHECK(g2.m == m);
        CHECK(classify_even(even_value(EvenKlass::G3, m)).m == m);
    }
}

TEST_CASE("every even number >= 4 lands in exactly one class") {
    for (uint64_t g = 4; g <= 5000; g += 2) {
        const EvenClass ec = classify_even(g);
        CHECK(even_value(ec.klass, ec.m) == g);
    }
}

TEST_CASE("composite_progressions for the small primes") {
    const auto p5 = composite_progressions(5);
    CHECK(p5[0].target == WheelClass::A);
    CHECK(p5[0].first_index == 1); // a_1 = 5 itself
    CHECK(p5[0].common_difference == 5);
    CHECK(p5[0].sign_form == SignForm::plus);
    CHECK(p5[1].target == WheelClass::B);
    CHECK(p5[1].first_index == 4); // b_4 = 25
    CHECK(p5[1].sign_form == SignForm::minus);

    const auto p7 = composite_progressions(7);
    CHECK(p7[0].first_index == 6); // a_6 = 35
    CHECK(p7[0].sign_form == SignForm::minus);
    CHECK(p7[1].first_index == 1); // b_1 = 7 itself; b_8 = 49 is the first composite
    CHECK(p7[1].sign_form == SignForm::plus);

    const auto p11 = composite_progressions(11);
    CHECK(p11[0].first_index == 2); // a_2 = 11 itself
    CHECK(p11[1].first_index == 9); // b_9 = 55

    CHECK_THROWS_AS((void)composite_progressions(4), std::domain_error);
    CHECK_THROWS_AS((void)composite_progressions(9), std::domain_error);
    CHECK_THROWS_AS((void)composite_progressions(3), std::domain_error);
}

TEST_CASE("descriptors predict divisibility: direct scan to 10^4") {
    for (uint64_t p : {5, 7, 11, 13, 17, 19, 23, 97, 101}) {
        const auto descs = composite_progressions(p);
        for (const auto& d : descs) {
            CHECK(d.first_index >= 1);
            CHECK(d.first_index <= p);
            for (uint64_t i = 1; i <= 10'000; ++i) {
                const bool divisible = term(d.target, i) % p == 0;
                CHECK(divisible == (i % p == d.first_index % p));
            }
        }
    }
}

TEST_CASE("the A and B residues never coincide") {
    const oracle::SimpleSieve sieve(1000);
    for (uint64_t p = 5; p <= 997; ++p) {
        if (!sieve.is_prime(p)) continue;
        const auto descs = composite_progressions(p);
        CHECK(descs[0].first_index % p != descs[1].first_index % p);
        // mirror residues: the two sum to p
        CHECK((descs[0].first_index + descs[1].first_index) % p == 0);
    }
}

TEST_CASE("self_index locates p inside its own class") {
    CHECK(self_index(5, WheelClass::A) == 1);
    CHECK(self_index(5, WheelClass::B) == 0);
    CHECK(self_index(7, WheelClass::B) == 1);
    CHECK(self_index(7, WheelClass::A) == 0);
    CHECK(self_index(11, WheelClass::A) == 2);
    CHECK(self_index(13, WheelClass::B) == 2);
}
