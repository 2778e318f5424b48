#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nfl {

// Exact rational with canonical form (normalized, positive denominator).
// Used for empirical error rates and error-profile histogram keys, where
// float keys would collide or drift.
struct Fraction {
    std::int64_t num{0};
    std::int64_t den{1};

    constexpr Fraction() = default;

    constexpr Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend constexpr bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend constexpr bool operator<(const Fraction& a, const Fraction& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend constexpr bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
    friend constexpr bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend constexpr bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

    friend constexpr Fraction operator+(const Fraction& a, const Fraction& b) {
        return Fraction(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend constexpr Fraction operator-(const Fraction& a, const Fraction& b) {
        return Fraction(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend constexpr Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(a.num * b.num, a.den * b.den);
    }
    friend constexpr Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.num == 0) throw std::invalid_argument("Fraction: division by zero");
        return Fraction(a.num * b.den, a.den * b.num);
    }
};

}  // namespace nfl
