#pragma once

/*
 * scalar.hpp
 * ----------
 * The exact scalar kinds and the runtime-tagged Scalar used at dynamic
 * boundaries (CLI dispatch, reports). Statically typed code is generic
 * over ExactScalar; Scalar handles the mixed case by lifting Rational
 * operands to GaussianRational and narrowing real-valued results back.
 */

#include "binomia/gaussian_rational.hpp"

#include <concepts>
#include <variant>

namespace binomia {

template <typename S>
concept ExactScalar = std::same_as<S, Rational> || std::same_as<S, GaussianRational>;

template <ExactScalar S>
S scalar_cast(const Rational& r) {
    if constexpr (std::same_as<S, Rational>)
        return r;
    else
        return GaussianRational(r);
}

template <ExactScalar S>
S scalar_from_int(long long n) {
    return scalar_cast<S>(Rational(BigInt(n)));
}

class Scalar {
public:
    Scalar() : value_(Rational()) {}

    Scalar(Rational r) : value_(std::move(r)) {}

    // Real-valued complex inputs narrow to the Rational alternative, so the
    // stored kind is always the narrowest one.
    Scalar(GaussianRational g) : value_(Rational()) {
        if (g.is_real())
            value_ = g.re();
        else
            value_ = std::move(g);
    }

    bool is_real() const { return std::holds_alternative<Rational>(value_); }

    const Rational& rational() const {
        if (!is_real())
            throw std::domain_error("scalar has a nonzero imaginary part");
        return std::get<Rational>(value_);
    }

    GaussianRational gaussian() const {
        if (is_real())
            return GaussianRational(std::get<Rational>(value_));
        return std::get<GaussianRational>(value_);
    }

    bool is_zero() const {
        return is_real() ? std::get<Rational>(value_).is_zero() : false;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_real() && b.is_real())
            return Scalar(a.rational() + b.rational());
        return Scalar(a.gaussian() + b.gaussian());
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.is_real() && b.is_real())
            return Scalar(a.rational() - b.rational());
        return Scalar(a.gaussian() - b.gaussian());
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_real() && b.is_real())
            return Scalar(a.rational() * b.rational());
        return Scalar(a.gaussian() * b.gaussian());
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (a.is_real() && b.is_real())
            return Scalar(a.rational() / b.rational());
        return Scalar(a.gaussian() / b.gaussian());
    }

    Scalar operator-() const {
        if (is_real())
            return Scalar(-std::get<Rational>(value_));
        return Scalar(-std::get<GaussianRational>(value_));
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.is_real() != b.is_real())
            return false; // narrowing invariant: kinds differ => values differ
        if (a.is_real())
            return a.rational() == b.rational();
        return std::get<GaussianRational>(a.value_) == std::get<GaussianRational>(b.value_);
    }

    std::string to_string() const {
        if (is_real())
            return std::get<Rational>(value_).to_string();
        return std::get<GaussianRational>(value_).to_string();
    }

private:
    std::variant<Rational, GaussianRational> value_;
};

inline std::string to_string(const Scalar& s) { return s.to_string(); }

} // namespace binomia
