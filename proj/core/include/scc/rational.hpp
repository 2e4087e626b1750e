#pragma once

// Exact rational arithmetic on 64-bit integers.  Rates and cache sizes are
// carried as rationals end to end; decimal rendering happens only at the
// reporting edge.  Overflow throws instead of wrapping.

#include <numeric>
#include <stdexcept>
#include <string>

namespace scc {

namespace detail {

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: multiply overflow");
    return r;
}

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: add overflow");
    return r;
}

}  // namespace detail

class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        using detail::checked_add;
        using detail::checked_mul;
        return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(-b.num_, b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        // cross-reduce first to keep intermediates small
        long long g1 = std::gcd(a.num_, b.den_);
        long long g2 = std::gcd(b.num_, a.den_);
        long long an = g1 ? a.num_ / g1 : a.num_;
        long long bd = g1 ? b.den_ / g1 : b.den_;
        long long bn = g2 ? b.num_ / g2 : b.num_;
        long long ad = g2 ? a.den_ / g2 : a.den_;
        return Rational(detail::checked_mul(an, bn), detail::checked_mul(ad, bd));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational: division by zero");
        return a * Rational(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return detail::checked_mul(a.num_, b.den_) < detail::checked_mul(b.num_, a.den_);
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "5", "115/36", "-3/2"
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace scc
