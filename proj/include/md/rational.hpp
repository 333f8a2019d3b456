#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "md/errors.hpp"

namespace md {

// Exact rational with a positive denominator, always stored reduced.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long num, long long den) {
        if (den == 0) throw ContractError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        return Rational{num, den};
    }

    friend Rational operator+(Rational a, Rational b) {
        return make(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return make(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        return make(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num == 0) throw ContractError("rational division by zero");
        return make(a.num * b.den, a.den * b.num);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a == b || a < b;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace md
