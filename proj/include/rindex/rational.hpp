#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rindex {

namespace detail {

using int128 = __int128;
using uint128 = unsigned __int128;

inline uint128 uabs128(int128 v) {
    return v < 0 ? -static_cast<uint128>(v) : static_cast<uint128>(v);
}

inline uint128 gcd128(uint128 a, uint128 b) {
    while (b != 0) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace detail

/// Exact fraction on 64-bit components, always stored in lowest terms with a
/// positive denominator. Arithmetic is carried out in 128-bit intermediates
/// and throws std::overflow_error if a reduced result no longer fits.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {} // NOLINT: implicit by design

    Rational(std::int64_t numerator, std::int64_t denominator) {
        *this = make(numerator, denominator);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational: division by zero");
        return make128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_; // canonical form
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
    }

    /// "n" for integers, "n/d" otherwise.
    std::string to_fraction_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Fixed-point rendering with the given number of decimal places,
    /// ties resolved to the even digit (bankers' rounding).
    std::string to_decimal_string(int places = 4) const {
        detail::int128 scale = 1;
        for (int i = 0; i < places; ++i) scale *= 10;
        const bool neg = num_ < 0;
        detail::uint128 scaled = detail::uabs128(num_) * detail::uint128(scale);
        detail::uint128 q = scaled / den_;
        detail::uint128 r = scaled % den_;
        const detail::uint128 twice = r * 2;
        if (twice > detail::uint128(den_) ||
            (twice == detail::uint128(den_) && (q & 1) != 0)) {
            ++q;
        }
        detail::uint128 whole = q / detail::uint128(scale);
        detail::uint128 frac = q % detail::uint128(scale);
        std::string out;
        if (neg && q != 0) out += '-';
        out += u128_to_string(whole);
        if (places > 0) {
            std::string f = u128_to_string(frac);
            out += '.';
            out.append(static_cast<std::size_t>(places) - f.size(), '0');
            out += f;
        }
        return out;
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

private:
    static detail::int128 i128(std::int64_t v) { return detail::int128(v); }

    static Rational make(std::int64_t n, std::int64_t d) {
        return make128(detail::int128(n), detail::int128(d));
    }

    static Rational make128(detail::int128 n, detail::int128 d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        detail::uint128 g = detail::gcd128(detail::uabs128(n), detail::uint128(d));
        if (g > 1) {
            n /= detail::int128(g);
            d /= detail::int128(g);
        }
        constexpr detail::int128 kMax = INT64_MAX;
        constexpr detail::int128 kMin = INT64_MIN;
        if (n > kMax || n < kMin || d > kMax) {
            throw std::overflow_error("rational: value exceeds 64-bit range");
        }
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static std::string u128_to_string(detail::uint128 v) {
        if (v == 0) return "0";
        std::string s;
        while (v != 0) {
            s += char('0' + int(v % 10));
            v /= 10;
        }
        return {s.rbegin(), s.rend()};
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace rindex
