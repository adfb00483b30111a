#pragma once

/*
 * rational.hpp
 * ------------
 * Arbitrary-precision rational numbers, the scalar field for every exact
 * computation in binomia.
 *
 * A Rational is always held in canonical form:
 *   - the denominator is strictly positive,
 *   - gcd(|numerator|, denominator) == 1,
 *   - zero is represented uniquely as 0/1.
 *
 * Canonicalization happens eagerly in every constructor, so equality is
 * plain structural comparison and the invariants hold at any moment.
 * Values are immutable in practice (all operators return new values) and
 * may be shared freely between threads.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace binomia {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;

    Rational(BigInt numerator) : num_(std::move(numerator)) {}

    Rational(BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        normalize();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw std::domain_error("division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational reciprocal() const {
        if (is_zero())
            throw std::domain_error("division by zero");
        return Rational(den_, num_);
    }

    Rational abs() const { return is_negative() ? -*this : *this; }

    // Canonical form makes structural comparison exact.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Nearest double; exact scaling is delegated to cpp_rational so huge
    // numerators/denominators do not overflow to inf/inf.
    double to_double() const {
        return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
    }

    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    // Accepts "p", "+p", "-p" and "p/q" with q a plain digit sequence.
    static Rational parse(std::string_view text) {
        auto pos = text.find('/');
        if (pos == std::string_view::npos)
            return Rational(parse_integer(text, text));
        BigInt num = parse_integer(text.substr(0, pos), text);
        std::string_view den_part = text.substr(pos + 1);
        if (den_part.empty() || !all_digits(den_part))
            throw parse_error(text);
        return Rational(std::move(num), BigInt(std::string(den_part)));
    }

private:
    void normalize() {
        if (den_.is_zero())
            throw std::domain_error("division by zero");
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    static bool all_digits(std::string_view s) {
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return !s.empty();
    }

    static std::invalid_argument parse_error(std::string_view text) {
        return std::invalid_argument("cannot parse rational '" + std::string(text) + "'");
    }

    static BigInt parse_integer(std::string_view s, std::string_view whole) {
        std::string_view body = s;
        bool negative = false;
        if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
            negative = body.front() == '-';
            body.remove_prefix(1);
        }
        if (!all_digits(body))
            throw parse_error(whole);
        BigInt v = BigInt(std::string(body));
        return negative ? -v : v;
    }

    BigInt num_{0};
    BigInt den_{1};
};

inline std::string to_string(const Rational& r) { return r.to_string(); }

} // namespace binomia
