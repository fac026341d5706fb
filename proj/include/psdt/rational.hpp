#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace psdt {

// Exact rational arithmetic for the closed-form throttling expressions.
// All floor/ceil decisions on square roots go through integer comparisons;
// doubles appear only in t_P, which is irrational by nature.
using Rational = boost::rational<long long>;

// floor(sqrt(x)) for x >= 0, exact.
long long isqrt_floor(long long x);

// Largest s >= 0 with s*s <= r. Requires r >= 0.
long long floor_sqrt_rational(const Rational& r);

// ceil(a / b) for b > 0, a any sign.
long long ceil_div(long long a, long long b);

long long floor_of(const Rational& r);
long long ceil_of(const Rational& r);

// True iff r > sqrt(x) where x >= 0, decided by squaring (exact).
bool exceeds_sqrt(const Rational& r, const Rational& x);

double to_double(const Rational& r);

// "5", "17/3" style; used by reports and the decimal CSV writer.
std::string to_string(const Rational& r);

// Fixed-point decimal with the given number of fractional digits,
// trailing zeros trimmed ("5.5", "4", "5.666666667").
std::string to_decimal_string(const Rational& r, int digits = 9);

}  // namespace psdt
