#pragma once

/*
 * series.hpp
 * ----------
 * Truncated formal power series over an exact scalar kind. Storage is
 * dense: a series of order K holds exactly K+1 coefficients including
 * trailing zeros, so the truncation order is always explicit and
 * equality is decidable.
 *
 * series_multiply is the plain Cauchy product. A result of order K needs
 * both inputs known up to order K; shorter inputs raise "truncation
 * underflow". A caller asserting that a short series is an exact
 * polynomial lifts it to the required order with with_order() first.
 */

#include "binomia/derivation.hpp"

#include <string>
#include <vector>

namespace binomia {

template <ExactScalar S>
class TruncatedSeries {
public:
    // Zero series of the given truncation order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, scalar_from_int<S>(0)) {}

    explicit TruncatedSeries(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("series needs at least the constant coefficient");
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const S& operator[](std::size_t k) const { return coeffs_.at(k); }

    S& at(std::size_t k) { return coeffs_.at(k); }

    const std::vector<S>& coefficients() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<S> coeffs_;
};

// Same coefficients at a new truncation order: zero-padded when extended
// (the caller's assertion that the series is exact beyond its order),
// dropped when restricted.
template <ExactScalar S>
TruncatedSeries<S> with_order(const TruncatedSeries<S>& s, std::size_t order) {
    std::vector<S> c(s.coefficients().begin(),
                     s.coefficients().begin() +
                         static_cast<std::ptrdiff_t>(std::min(order, s.order()) + 1));
    c.resize(order + 1, scalar_from_int<S>(0));
    return TruncatedSeries<S>(std::move(c));
}

// (1+x)^n up to order K, coefficients from the product formula computed
// incrementally: c_k = c_{k-1} * (n - k + 1) / k.
template <ExactScalar S>
TruncatedSeries<S> binomial_series(const S& exponent, std::size_t order) {
    std::vector<S> c;
    c.reserve(order + 1);
    c.push_back(scalar_from_int<S>(1));
    for (std::size_t k = 1; k <= order; ++k) {
        S next = c.back() * (exponent - scalar_from_int<S>(static_cast<long long>(k) - 1));
        c.push_back(next / scalar_from_int<S>(static_cast<long long>(k)));
    }
    return TruncatedSeries<S>(std::move(c));
}

// Cauchy product truncated at `order`.
template <ExactScalar S>
TruncatedSeries<S> series_multiply(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b,
                                   std::size_t order) {
    if (a.order() < order || b.order() < order)
        throw std::invalid_argument("truncation underflow");
    TruncatedSeries<S> out(order);
    for (std::size_t k = 0; k <= order; ++k) {
        S sum = scalar_from_int<S>(0);
        for (std::size_t j = 0; j <= k; ++j)
            sum = sum + a[j] * b[k - j];
        out.at(k) = sum;
    }
    return out;
}

// 1 + x as an exact polynomial padded to the given order.
template <ExactScalar S>
TruncatedSeries<S> one_plus_x(std::size_t order) {
    TruncatedSeries<S> s(order);
    s.at(0) = scalar_from_int<S>(1);
    if (order >= 1)
        s.at(1) = scalar_from_int<S>(1);
    return s;
}

// (1+x)^m by m-1 successive self-multiplications, the historical
// integer-exponent construction. Exact; zero beyond degree m.
inline TruncatedSeries<Rational> integer_power_expand(std::size_t m, std::size_t order) {
    TruncatedSeries<Rational> base = one_plus_x<Rational>(order);
    if (m == 0) {
        TruncatedSeries<Rational> out(order);
        out.at(0) = Rational(BigInt(1));
        return out;
    }
    TruncatedSeries<Rational> result = base;
    for (std::size_t step = 1; step < m; ++step)
        result = series_multiply(result, base, order);
    return result;
}

struct ShiftCheckEntry {
    std::size_t degree = 0;
    bool passed = false;
};

struct ShiftCheckReport {
    std::vector<ShiftCheckEntry> checks;
    bool all_passed = true;
};

// Multiplies the expansion of (1+x)^n by (1+x) and compares, degree by
// degree, with the expansion of (1+x)^(n+1). The source series is taken
// one order higher so the comparison at `order` has no boundary artifact.
template <ExactScalar S>
ShiftCheckReport shift_multiply_check(const S& exponent, std::size_t order) {
    TruncatedSeries<S> source = binomial_series(exponent, order + 1);
    TruncatedSeries<S> shifted =
        binomial_series(exponent + scalar_from_int<S>(1), order);
    TruncatedSeries<S> product =
        series_multiply(one_plus_x<S>(order + 1), source, order);
    ShiftCheckReport report;
    for (std::size_t k = 0; k <= order; ++k) {
        bool ok = product[k] == shifted[k];
        report.checks.push_back({k, ok});
        report.all_passed = report.all_passed && ok;
    }
    return report;
}

inline ShiftCheckReport shift_multiply_check(const Exponent& exponent, std::size_t order) {
    Scalar s = exponent.exact_scalar();
    if (s.is_real())
        return shift_multiply_check(s.rational(), order);
    return shift_multiply_check(s.gaussian(), order);
}

namespace detail {

inline bool render_negative(const Rational& c) { return c.is_negative(); }
inline bool render_negative(const GaussianRational& c) {
    return c.is_real() && c.re().is_negative();
}

inline std::string render_magnitude(const Rational& c) { return c.abs().to_string(); }
inline std::string render_magnitude(const GaussianRational& c) {
    if (c.is_real())
        return c.re().abs().to_string();
    return "(" + c.to_string() + ")";
}

inline bool render_unit(const Rational& c) { return c.abs().is_one(); }
inline bool render_unit(const GaussianRational& c) {
    return c.is_real() && c.re().abs().is_one();
}

inline std::string latex_rational(const Rational& r) {
    std::string s;
    if (r.is_negative())
        s += '-';
    if (r.is_integer())
        s += r.abs().numerator().str();
    else
        s += "\\frac{" + r.abs().numerator().str() + "}{" + r.denominator().str() + "}";
    return s;
}

inline std::string latex_magnitude(const Rational& c) { return latex_rational(c.abs()); }
inline std::string latex_magnitude(const GaussianRational& c) {
    if (c.is_real())
        return latex_rational(c.re().abs());
    std::string im;
    if (c.im().is_one())
        im = "i";
    else if ((-c.im()).is_one())
        im = "-i";
    else
        im = latex_rational(c.im()) + "i";
    if (c.re().is_zero())
        return "\\left(" + im + "\\right)";
    if (!c.im().is_negative() && !im.starts_with('-'))
        return "\\left(" + latex_rational(c.re()) + "+" + im + "\\right)";
    return "\\left(" + latex_rational(c.re()) + im + "\\right)";
}

} // namespace detail

// "c0 + c1*x + c2*x^2 + ..." with zero terms omitted; a series that is
// identically zero renders as "0". Complex coefficients that are not real
// are parenthesized and never sign-folded.
template <ExactScalar S>
std::string to_text(const TruncatedSeries<S>& s) {
    std::string out;
    for (std::size_t k = 0; k <= s.order(); ++k) {
        const S& c = s[k];
        if (c == scalar_from_int<S>(0))
            continue;
        std::string body;
        if (k == 0) {
            body = detail::render_magnitude(c);
        } else {
            std::string var = k == 1 ? "x" : "x^" + std::to_string(k);
            body = detail::render_unit(c) ? var : detail::render_magnitude(c) + "*" + var;
        }
        detail::append_signed_term(out, detail::render_negative(c), body);
    }
    return out.empty() ? "0" : out;
}

// Display-style rendering with \frac{p}{q} coefficients.
template <ExactScalar S>
std::string to_latex(const TruncatedSeries<S>& s) {
    std::string out;
    for (std::size_t k = 0; k <= s.order(); ++k) {
        const S& c = s[k];
        if (c == scalar_from_int<S>(0))
            continue;
        std::string var = k == 0 ? "" : (k == 1 ? "x" : "x^{" + std::to_string(k) + "}");
        std::string body;
        if (k == 0)
            body = detail::latex_magnitude(c);
        else
            body = detail::render_unit(c) ? var : detail::latex_magnitude(c) + var;
        detail::append_signed_term(out, detail::render_negative(c), body);
    }
    return out.empty() ? "0" : out;
}

// Exact coefficient strings, constant term first; the machine-readable form.
template <ExactScalar S>
std::vector<std::string> coefficient_strings(const TruncatedSeries<S>& s) {
    std::vector<std::string> out;
    out.reserve(s.order() + 1);
    for (const S& c : s.coefficients())
        out.push_back(to_string(c));
    return out;
}

} // namespace binomia
