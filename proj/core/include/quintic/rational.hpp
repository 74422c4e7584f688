#pragma once

/**
 * Exact rational arithmetic over unbounded integers.
 *
 * Every quantity in this project is an exact fraction; no floating point
 * appears anywhere. Values are kept canonical at all times:
 *   - denominator > 0 (sign lives in the numerator)
 *   - gcd(|numerator|, denominator) = 1
 *   - zero is 0/1
 *
 * Serialized form is "p/q" for non-integers and "p" for integers; this is
 * the wire format of every JSON interface in the artifact.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quintic {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
    BigInt num_;
    BigInt den_;

    void reduce() {
        if (den_ == 0)
            throw std::domain_error("Rational: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        num_ /= g;
        den_ /= g;
    }

public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const { return Rational(-num_, den_); }

    Rational operator+(const Rational& rhs) const {
        return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    }
    Rational operator-(const Rational& rhs) const {
        return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    }
    Rational operator*(const Rational& rhs) const {
        return Rational(num_ * rhs.num_, den_ * rhs.den_);
    }
    Rational operator/(const Rational& rhs) const {
        if (rhs.num_ == 0)
            throw std::domain_error("Rational: division by zero");
        return Rational(num_ * rhs.den_, den_ * rhs.num_);
    }

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    bool operator==(const Rational& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    std::strong_ordering operator<=>(const Rational& rhs) const {
        BigInt l = num_ * rhs.den_, r = rhs.num_ * den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Integer power; negative exponents invert (base must be nonzero).
    Rational pow(long e) const {
        if (e < 0) {
            if (num_ == 0)
                throw std::domain_error("Rational: negative power of zero");
            return Rational(den_, num_).pow(-e);
        }
        Rational acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    // Accepts "p" or "p/q" with optional leading '-'; q must be nonzero.
    // Non-canonical input like "2875/240" is accepted and reduced.
    static Rational parse(std::string_view text);
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

} // namespace quintic
