#include "psdt/rational.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace psdt {

long long isqrt_floor(long long x) {
    if (x < 0) throw std::invalid_argument("isqrt_floor: negative argument");
    if (x == 0) return 0;
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    // compare via division: r*r can overflow near the 63-bit boundary
    while (r > 1 && r > x / r) --r;
    while (r + 1 <= x / (r + 1)) ++r;
    return r;
}

long long floor_sqrt_rational(const Rational& r) {
    if (r < 0) throw std::invalid_argument("floor_sqrt_rational: negative argument");
    // s*s <= num/den  <=>  s*s*den <= num
    long long s = isqrt_floor(r.numerator() / r.denominator());
    while (Rational(s + 1) * (s + 1) <= r) ++s;
    while (s > 0 && Rational(s) * s > r) --s;
    return s;
}

long long ceil_div(long long a, long long b) {
    assert(b > 0);
    long long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

long long floor_of(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

long long ceil_of(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

bool exceeds_sqrt(const Rational& r, const Rational& x) {
    if (x < 0) throw std::invalid_argument("exceeds_sqrt: negative radicand");
    if (r < 0) return false;
    return r * r > x;
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_decimal_string(const Rational& r, int digits) {
    long long num = r.numerator();
    long long den = r.denominator();
    bool neg = num < 0;
    if (neg) num = -num;
    long long whole = num / den;
    long long rem = num % den;
    std::string out = (neg ? "-" : "") + std::to_string(whole);
    if (rem == 0) return out;
    std::string frac;
    for (int i = 0; i < digits && rem != 0; ++i) {
        rem *= 10;
        // round the final kept digit
        long long d = rem / den;
        rem %= den;
        if (i == digits - 1 && rem != 0 && 2 * rem >= den) ++d;  // no carry handling needed below 10
        if (d >= 10) d = 9;
        frac += static_cast<char>('0' + d);
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (frac.empty()) return out;
    return out + "." + frac;
}

}  // namespace psdt
