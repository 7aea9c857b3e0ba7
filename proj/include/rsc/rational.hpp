#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "rsc/error.hpp"

namespace rsc {

/// Exact rational number on 64-bit numerator/denominator.
///
/// Invariants: denominator > 0 and gcd(|num|, den) == 1.  All arithmetic is
/// exact; intermediates use 128-bit integers and results that do not fit back
/// into 64 bits throw OverflowError rather than silently wrapping.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {} // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw Error("Rational: zero denominator");
        __int128 n = num;
        __int128 d = den;
        if (d < 0) { n = -n; d = -d; }
        assign_reduced(n, d);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    /// Largest integer <= value.
    std::int64_t floor() const {
        if (num_ >= 0) return num_ / den_;
        return -((-num_ + den_ - 1) / den_);
    }
    /// Smallest integer >= value.
    std::int64_t ceil() const { return -(-*this).floor(); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator-(const Rational& x) { return make_raw(-x.num_, x.den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make_from(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make_from(static_cast<__int128>(a.num_) * b.num_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("Rational: division by zero");
        __int128 n = static_cast<__int128>(a.num_) * b.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.num_;
        if (d < 0) { n = -n; d = -d; }
        return make_from(n, d);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Serialized form "p/q" in lowest terms, e.g. "3/1", "-1/2".
    std::string to_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p/q" or a bare integer "p"; normalizes to lowest terms.
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        try {
            std::size_t used = 0;
            if (slash == std::string::npos) {
                const std::int64_t n = std::stoll(text, &used);
                if (used != text.size()) throw ParseError("Rational: trailing characters in '" + text + "'");
                return Rational(n);
            }
            const std::int64_t n = std::stoll(text.substr(0, slash), &used);
            if (used != slash) throw ParseError("Rational: bad numerator in '" + text + "'");
            const std::string den_part = text.substr(slash + 1);
            const std::int64_t d = std::stoll(den_part, &used);
            if (used != den_part.size()) throw ParseError("Rational: bad denominator in '" + text + "'");
            if (d <= 0) throw ParseError("Rational: denominator must be positive in '" + text + "'");
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw ParseError("Rational: cannot parse '" + text + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("Rational: out of range '" + text + "'");
        }
    }

private:
    static Rational make_raw(std::int64_t n, std::int64_t d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    static Rational make_from(__int128 n, __int128 d) {
        Rational r;
        r.assign_reduced(n, d);
        return r;
    }

    void assign_reduced(__int128 n, __int128 d) {
        const __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lo = -static_cast<__int128>(UINT64_C(1) << 63);
        constexpr __int128 hi = static_cast<__int128>((UINT64_C(1) << 63) - 1);
        if (n < lo || n > hi || d > hi) throw OverflowError("Rational: value exceeds 64-bit range");
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace rsc
