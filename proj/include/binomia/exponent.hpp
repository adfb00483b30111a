#pragma once

/*
 * exponent.hpp
 * ------------
 * The exponent of (1+x)^n in all admitted forms: integer, rational,
 * Gaussian-rational complex, or floating point. The float kind exists
 * only for the numeric-evaluation path; every exact operation rejects it.
 *
 * The stored representation is canonical: a complex value with zero
 * imaginary part narrows to its rational part, and kind() reports
 * `integer` for rationals with denominator one.
 */

#include "binomia/scalar.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <variant>

namespace binomia {

enum class ExponentKind { integer, rational, complex_rational, floating };

class Exponent {
public:
    Exponent() : value_(Rational()) {}

    Exponent(long long n) : value_(Rational(BigInt(n))) {}

    Exponent(int n) : Exponent(static_cast<long long>(n)) {}

    Exponent(Rational r) : value_(std::move(r)) {}

    Exponent(GaussianRational g) : value_(Rational()) {
        if (g.is_real())
            value_ = g.re();
        else
            value_ = std::move(g);
    }

    explicit Exponent(double f) : value_(f) {
        if (!std::isfinite(f))
            throw std::invalid_argument("exponent must be finite");
    }

    ExponentKind kind() const {
        if (std::holds_alternative<double>(value_))
            return ExponentKind::floating;
        if (std::holds_alternative<GaussianRational>(value_))
            return ExponentKind::complex_rational;
        return std::get<Rational>(value_).is_integer() ? ExponentKind::integer
                                                       : ExponentKind::rational;
    }

    bool is_exact() const { return kind() != ExponentKind::floating; }

    bool is_complex() const { return kind() == ExponentKind::complex_rational; }

    bool is_nonnegative_integer() const {
        return kind() == ExponentKind::integer &&
               !std::get<Rational>(value_).is_negative();
    }

    // Exact scalar view; the float kind has none.
    Scalar exact_scalar() const {
        if (!is_exact())
            throw std::domain_error("exact evaluation requires exact scalar");
        if (is_complex())
            return Scalar(std::get<GaussianRational>(value_));
        return Scalar(std::get<Rational>(value_));
    }

    const Rational& rational_value() const {
        if (kind() == ExponentKind::integer || kind() == ExponentKind::rational)
            return std::get<Rational>(value_);
        throw std::domain_error("exponent is not an exact rational");
    }

    const GaussianRational& complex_value() const {
        if (is_complex())
            return std::get<GaussianRational>(value_);
        throw std::domain_error("exponent is not complex");
    }

    double float_value() const {
        if (kind() != ExponentKind::floating)
            throw std::domain_error("exponent is not a float");
        return std::get<double>(value_);
    }

    std::complex<double> to_complex() const {
        switch (kind()) {
        case ExponentKind::floating:
            return {std::get<double>(value_), 0.0};
        case ExponentKind::complex_rational: {
            const auto& g = std::get<GaussianRational>(value_);
            return {g.re().to_double(), g.im().to_double()};
        }
        default:
            return {std::get<Rational>(value_).to_double(), 0.0};
        }
    }

    double to_double() const {
        if (is_complex())
            throw std::domain_error("exponent is complex");
        if (kind() == ExponentKind::floating)
            return std::get<double>(value_);
        return std::get<Rational>(value_).to_double();
    }

    std::string to_string() const {
        switch (kind()) {
        case ExponentKind::floating: {
            char buf[64];
            auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), std::get<double>(value_));
            (void)ec;
            return std::string(buf, end);
        }
        case ExponentKind::complex_rational:
            return std::get<GaussianRational>(value_).to_string();
        default:
            return std::get<Rational>(value_).to_string();
        }
    }

    // Grammar: integer "3", rational "1/2" "-2/3", complex "1/2+1/3i" "i",
    // float "0.5" "1e-3". Surrounding whitespace is ignored.
    static Exponent parse(std::string_view text) {
        std::string_view t = trimmed(text);
        if (t.empty())
            throw std::invalid_argument("empty exponent");
        if (exact_literal(t)) {
            if (t.find('i') != std::string_view::npos)
                return Exponent(GaussianRational::parse(t));
            return Exponent(Rational::parse(t));
        }
        double f = 0.0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), f);
        if (ec == std::errc() && ptr == t.data() + t.size()) {
            if (!std::isfinite(f))
                throw std::invalid_argument("exponent must be finite");
            return Exponent(f);
        }
        throw std::invalid_argument("cannot parse exponent '" + std::string(text) + "'");
    }

private:
    static std::string_view trimmed(std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    }

    static bool exact_literal(std::string_view s) {
        for (char c : s) {
            bool ok = (c >= '0' && c <= '9') || c == '/' || c == '+' || c == '-' || c == 'i';
            if (!ok)
                return false;
        }
        return true;
    }

    std::variant<Rational, GaussianRational, double> value_;
};

inline std::string to_string(const Exponent& e) { return e.to_string(); }

} // namespace binomia
