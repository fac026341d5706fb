#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psdt/rational.hpp"

using psdt::Rational;

TEST_CASE("isqrt_floor exact on squares and neighbors") {
    CHECK(psdt::isqrt_floor(0) == 0);
    CHECK(psdt::isqrt_floor(1) == 1);
    CHECK(psdt::isqrt_floor(2) == 1);
    CHECK(psdt::isqrt_floor(3) == 1);
    CHECK(psdt::isqrt_floor(4) == 2);
    for (long long k = 1; k <= 100000; k += 7) {
        CHECK(psdt::isqrt_floor(k * k) == k);
        CHECK(psdt::isqrt_floor(k * k - 1) == k - 1);
        CHECK(psdt::isqrt_floor(k * k + 1) == k);
    }
    // near the double-precision danger zone
    long long big = 3037000499LL;  // floor(sqrt(2^63 - 1))
    CHECK(psdt::isqrt_floor(big * big) == big);
    CHECK(psdt::isqrt_floor(big * big - 1) == big - 1);
}

TEST_CASE("floor_sqrt_rational") {
    CHECK(psdt::floor_sqrt_rational(Rational(0)) == 0);
    CHECK(psdt::floor_sqrt_rational(Rational(1, 2)) == 0);
    CHECK(psdt::floor_sqrt_rational(Rational(1)) == 1);
    CHECK(psdt::floor_sqrt_rational(Rational(35, 9)) == 1);   // sqrt = 1.97...
    CHECK(psdt::floor_sqrt_rational(Rational(36, 9)) == 2);   // exactly 2
    CHECK(psdt::floor_sqrt_rational(Rational(37, 9)) == 2);
    CHECK(psdt::floor_sqrt_rational(Rational(9999, 100)) == 9);
    CHECK(psdt::floor_sqrt_rational(Rational(10000, 100)) == 10);
}

TEST_CASE("ceil_div handles signs") {
    CHECK(psdt::ceil_div(7, 3) == 3);
    CHECK(psdt::ceil_div(6, 3) == 2);
    CHECK(psdt::ceil_div(0, 5) == 0);
    CHECK(psdt::ceil_div(-1, 3) == 0);
    CHECK(psdt::ceil_div(-3, 3) == -1);
    CHECK(psdt::ceil_div(-4, 3) == -1);
    CHECK(psdt::ceil_div(1, 7) == 1);
}

TEST_CASE("floor_of / ceil_of") {
    CHECK(psdt::floor_of(Rational(7, 2)) == 3);
    CHECK(psdt::ceil_of(Rational(7, 2)) == 4);
    CHECK(psdt::floor_of(Rational(-7, 2)) == -4);
    CHECK(psdt::ceil_of(Rational(-7, 2)) == -3);
    CHECK(psdt::floor_of(Rational(4)) == 4);
    CHECK(psdt::ceil_of(Rational(4)) == 4);
    CHECK(psdt::ceil_of(Rational(17, 3)) == 6);
}

TEST_CASE("exceeds_sqrt decides strictly and exactly") {
    // 3/2 vs sqrt(9/4): equal, not exceeding
    CHECK_FALSE(psdt::exceeds_sqrt(Rational(3, 2), Rational(9, 4)));
    CHECK(psdt::exceeds_sqrt(Rational(3, 2), Rational(9, 4) - Rational(1, 1000000)));
    CHECK_FALSE(psdt::exceeds_sqrt(Rational(3, 2), Rational(9, 4) + Rational(1, 1000000)));
    // negative r never exceeds a nonnegative square root
    CHECK_FALSE(psdt::exceeds_sqrt(Rational(-5), Rational(1, 4)));
    CHECK(psdt::exceeds_sqrt(Rational(1, 1000000), Rational(0)));
}

TEST_CASE("string forms") {
    CHECK(psdt::to_string(Rational(17, 3)) == "17/3");
    CHECK(psdt::to_string(Rational(4)) == "4");
    CHECK(psdt::to_string(Rational(-7, 2)) == "-7/2");
    CHECK(psdt::to_decimal_string(Rational(11, 2)) == "5.5");
    CHECK(psdt::to_decimal_string(Rational(4)) == "4");
    CHECK(psdt::to_decimal_string(Rational(17, 3)) == "5.666666667");
    CHECK(psdt::to_decimal_string(Rational(1, 4)) == "0.25");
    CHECK(psdt::to_decimal_string(Rational(-11, 2)) == "-5.5");
    CHECK(psdt::to_double(Rational(1, 2)) == doctest::Approx(0.5));
}
