#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace swvote {

/// Exact rational for index values. Numerators and denominators here are
/// bounded by 2^n at the supported arities, so 64-bit arithmetic is exact.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
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

    Rational inverse() const {
        if (num == 0) throw std::domain_error("inverse of zero");
        return Rational(den, num);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        long long g = std::gcd(a.den, b.den);
        return Rational(a.num * (b.den / g) + b.num * (a.den / g), a.den / g * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(-b.num, b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    double to_double() const { return double(num) / double(den); }
};

} // namespace swvote
