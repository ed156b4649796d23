#pragma once

#include <numeric>
#include <string>

#include "rio/errors.hpp"

namespace rio {

// Exact ratio of two machine integers, always stored normalized with a
// positive denominator. Covers the per-chunk sense-cost arithmetic, where
// values like 4/3 and 15/4 must compare exactly.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;

    Rational(long long n, long long d) : num(n), den(d) {
        if (d == 0)
            throw DomainError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1)
            return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational&, const Rational&) = default;
};

inline Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
}

inline Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0)
        throw DomainError("division of rational by zero");
    return Rational(a.num * b.den, a.den * b.num);
}

} // namespace rio
