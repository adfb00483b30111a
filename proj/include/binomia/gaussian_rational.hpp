#pragma once

/*
 * gaussian_rational.hpp
 * ---------------------
 * Complex numbers with exact rational real and imaginary parts.
 * Supports the full field arithmetic; division multiplies by the
 * conjugate and divides by the (rational) norm, so results stay exact.
 *
 * Equality is componentwise on the canonical Rational parts; a value
 * with zero imaginary part compares equal to the lifted Rational.
 */

#include "binomia/rational.hpp"

namespace binomia {

class GaussianRational {
public:
    GaussianRational() = default;

    GaussianRational(Rational real) : re_(std::move(real)) {}

    GaussianRational(Rational real, Rational imag)
        : re_(std::move(real)), im_(std::move(imag)) {}

    static GaussianRational unit_imaginary() {
        return GaussianRational(Rational(), Rational(BigInt(1)));
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conjugate() const { return {re_, -im_}; }

    // |z|^2 = re^2 + im^2, an exact rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }

    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }

    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.norm();
        if (n.is_zero())
            throw std::domain_error("division by zero");
        GaussianRational t = a * b.conjugate();
        return {t.re_ / n, t.im_ / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // "a+bi" / "a-bi"; pure parts collapse to "a", "bi", "i", "-i"; zero is "0".
    std::string to_string() const {
        if (is_zero())
            return "0";
        if (im_.is_zero())
            return re_.to_string();
        std::string imag;
        if (im_.is_one())
            imag = "i";
        else if ((-im_).is_one())
            imag = "-i";
        else
            imag = im_.to_string() + "i";
        if (re_.is_zero())
            return imag;
        if (im_.is_negative())
            return re_.to_string() + imag;
        return re_.to_string() + "+" + imag;
    }

    // Accepts the rendering grammar plus bare rational/integer literals:
    // "a+bi", "a-bi", "bi", "i", "-i", "a".
    static GaussianRational parse(std::string_view text) {
        if (text.empty())
            throw parse_error(text);
        std::size_t split = std::string_view::npos;
        for (std::size_t i = 1; i < text.size(); ++i) {
            if (text[i] == '+' || text[i] == '-') {
                split = i;
                break;
            }
        }
        if (split == std::string_view::npos) {
            if (text.back() == 'i')
                return GaussianRational(Rational(), parse_imag_body(text.substr(0, text.size() - 1), text));
            return GaussianRational(Rational::parse(text));
        }
        std::string_view right = text.substr(split);
        if (right.back() != 'i')
            throw parse_error(text);
        Rational re = Rational::parse(text.substr(0, split));
        Rational im = parse_imag_body(right.substr(0, right.size() - 1), text);
        return GaussianRational(std::move(re), std::move(im));
    }

private:
    static std::invalid_argument parse_error(std::string_view text) {
        return std::invalid_argument("cannot parse complex value '" + std::string(text) + "'");
    }

    // Body of an imaginary literal with the trailing 'i' removed; an empty
    // or sign-only body means a unit coefficient.
    static Rational parse_imag_body(std::string_view body, std::string_view whole) {
        if (body.empty() || body == "+")
            return Rational(BigInt(1));
        if (body == "-")
            return Rational(BigInt(-1));
        try {
            return Rational::parse(body);
        } catch (const std::invalid_argument&) {
            throw parse_error(whole);
        }
    }

    Rational re_;
    Rational im_;
};

inline std::string to_string(const GaussianRational& g) { return g.to_string(); }

} // namespace binomia
