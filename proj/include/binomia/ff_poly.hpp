#pragma once

/*
 * ff_poly.hpp
 * -----------
 * Polynomials in the falling-factorial basis
 *
 *     ff_k(n) = n(n-1)(n-2)...(n-k+1),   ff_0 = 1,
 *
 * the natural basis for finite-difference calculus: the forward
 * difference acts term by term as
 *
 *     delta ff_k = k * ff_{k-1},
 *
 * so differencing and antidifferencing are exact, degree-shifting maps.
 * The antidifference returned here is the unique one whose value at
 * n = 0 is zero (it never produces an ff_0 term); callers wanting a
 * different constant add it themselves.
 *
 * Representation is a sparse map from basis index to Rational
 * coefficient with no stored zeros, so the map itself is canonical and
 * equality is structural. Coefficients are always rational; complex
 * numbers enter only through the evaluation point.
 */

#include "binomia/exponent.hpp"
#include "binomia/scalar.hpp"
#include "binomia/stirling.hpp"

#include <map>
#include <vector>

namespace binomia {

class FFPoly {
public:
    using CoeffMap = std::map<std::size_t, Rational>;

    FFPoly() = default;

    explicit FFPoly(CoeffMap coeffs) : coeffs_(std::move(coeffs)) {
        for (auto it = coeffs_.begin(); it != coeffs_.end();) {
            if (it->second.is_zero())
                it = coeffs_.erase(it);
            else
                ++it;
        }
    }

    static FFPoly constant(Rational c) { return basis(0, std::move(c)); }

    // c * ff(k)
    static FFPoly basis(std::size_t k, Rational c = Rational(BigInt(1))) {
        FFPoly p;
        p.add_term(k, c);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Highest stored basis index; the zero polynomial reports 0.
    std::size_t degree() const {
        return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
    }

    Rational coefficient(std::size_t k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Rational() : it->second;
    }

    const CoeffMap& coefficients() const { return coeffs_; }

    FFPoly& add_term(std::size_t k, const Rational& c) {
        if (c.is_zero())
            return *this;
        auto [it, inserted] = coeffs_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                coeffs_.erase(it);
        }
        return *this;
    }

    friend FFPoly operator+(const FFPoly& a, const FFPoly& b) {
        FFPoly out = a;
        for (const auto& [k, c] : b.coeffs_)
            out.add_term(k, c);
        return out;
    }

    friend FFPoly operator-(const FFPoly& a, const FFPoly& b) {
        FFPoly out = a;
        for (const auto& [k, c] : b.coeffs_)
            out.add_term(k, -c);
        return out;
    }

    friend FFPoly operator*(const Rational& s, const FFPoly& p) {
        FFPoly out;
        if (s.is_zero())
            return out;
        for (const auto& [k, c] : p.coeffs_)
            out.coeffs_.emplace(k, s * c);
        return out;
    }

    friend bool operator==(const FFPoly& a, const FFPoly& b) = default;

private:
    CoeffMap coeffs_;
};

// Exact evaluation: sum_k c_k * n(n-1)...(n-k+1), with the falling product
// extended incrementally across the sparse terms.
template <ExactScalar S>
S ff_eval(const FFPoly& p, const S& point) {
    S acc = scalar_from_int<S>(0);
    S falling = scalar_from_int<S>(1);
    std::size_t reached = 0; // falling == ff_reached(point)
    for (const auto& [k, c] : p.coefficients()) {
        while (reached < k) {
            falling = falling * (point - scalar_from_int<S>(static_cast<long long>(reached)));
            ++reached;
        }
        acc = acc + scalar_cast<S>(c) * falling;
    }
    return acc;
}

// Dynamic-boundary overload; float-kind exponents are rejected.
inline Scalar ff_eval(const FFPoly& p, const Exponent& point) {
    Scalar s = point.exact_scalar();
    if (s.is_real())
        return Scalar(ff_eval(p, s.rational()));
    return Scalar(ff_eval(p, s.gaussian()));
}

// q with q(n) = p(n+1) - p(n); termwise delta(c*ff_k) = c*k*ff_{k-1}.
inline FFPoly forward_difference(const FFPoly& p) {
    FFPoly out;
    for (const auto& [k, c] : p.coefficients())
        if (k > 0)
            out.add_term(k - 1, c * Rational(BigInt(k)));
    return out;
}

// The unique N with forward_difference(N) == m and N(0) == 0:
// termwise c*ff_k -> c/(k+1) * ff_{k+1}. Never emits an ff_0 term.
inline FFPoly antidifference(const FFPoly& m) {
    FFPoly out;
    for (const auto& [k, c] : m.coefficients())
        out.add_term(k + 1, c / Rational(BigInt(k + 1)));
    return out;
}

// Monomial coefficients (index = power of n, low to high) to the
// falling-factorial basis: n^j = sum_k S2(j,k) ff_k.
inline FFPoly monomial_to_ff(const std::vector<Rational>& mono_coeffs) {
    FFPoly out;
    for (std::size_t j = 0; j < mono_coeffs.size(); ++j) {
        const Rational& c = mono_coeffs[j];
        if (c.is_zero())
            continue;
        if (j == 0) {
            out.add_term(0, c);
            continue;
        }
        for (std::size_t k = 1; k <= j; ++k)
            out.add_term(k, c * Rational(stirling_second(j, k)));
    }
    return out;
}

// Inverse conversion via signed Stirling numbers of the first kind:
// ff_k = sum_j s1(k,j) n^j. Returns {} for the zero polynomial, otherwise
// a dense list with a nonzero leading entry.
inline std::vector<Rational> ff_to_monomial(const FFPoly& p) {
    if (p.is_zero())
        return {};
    std::vector<Rational> out(p.degree() + 1);
    for (const auto& [k, c] : p.coefficients()) {
        if (k == 0) {
            out[0] += c;
            continue;
        }
        for (std::size_t j = 1; j <= k; ++j)
            out[j] += c * Rational(stirling_first_signed(k, j));
    }
    while (!out.empty() && out.back().is_zero())
        out.pop_back(); // cancellation cannot happen here, but stay canonical
    return out;
}

namespace detail {

inline void append_signed_term(std::string& s, bool negative, const std::string& body) {
    if (s.empty()) {
        if (negative)
            s += '-';
    } else {
        s += negative ? " - " : " + ";
    }
    s += body;
}

} // namespace detail

// Terms "c*ff(k)" in descending k; unit coefficients collapse to "ff(k)".
inline std::string to_string(const FFPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    const auto& m = p.coefficients();
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        const auto& [k, c] = *it;
        Rational mag = c.abs();
        std::string body;
        if (k == 0)
            body = mag.to_string();
        else if (mag.is_one())
            body = "ff(" + std::to_string(k) + ")";
        else
            body = mag.to_string() + "*ff(" + std::to_string(k) + ")";
        detail::append_signed_term(out, c.is_negative(), body);
    }
    return out;
}

namespace detail {

inline std::invalid_argument ff_parse_error(std::string_view text) {
    return std::invalid_argument("cannot parse falling-factorial polynomial '" +
                                 std::string(text) + "'");
}

inline std::size_t parse_index(std::string_view s, std::string_view whole) {
    if (s.empty())
        throw ff_parse_error(whole);
    std::size_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw ff_parse_error(whole);
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

// One term: "c*ff(k)", "ff(k)", "c*n^j", "n^j", "n", or a bare rational,
// each optionally prefixed with a sign.
inline FFPoly parse_ff_term(std::string_view term, std::string_view whole) {
    Rational coeff(BigInt(1));
    if (!term.empty() && (term.front() == '+' || term.front() == '-')) {
        if (term.front() == '-')
            coeff = -coeff;
        term.remove_prefix(1);
    }
    if (term.empty())
        throw ff_parse_error(whole);
    std::string_view base = term;
    auto star = term.find('*');
    if (star != std::string_view::npos) {
        coeff = coeff * Rational::parse(term.substr(0, star));
        base = term.substr(star + 1);
    }
    if (base.starts_with("ff(") && base.ends_with(")"))
        return FFPoly::basis(parse_index(base.substr(3, base.size() - 4), whole), coeff);
    if (base == "n")
        return FFPoly::basis(1, coeff);
    if (base.starts_with("n^")) {
        std::size_t power = parse_index(base.substr(2), whole);
        std::vector<Rational> mono(power + 1);
        mono[power] = coeff;
        return monomial_to_ff(mono);
    }
    if (star == std::string_view::npos)
        return FFPoly::constant(coeff * Rational::parse(base));
    throw ff_parse_error(whole);
}

} // namespace detail

// Accepts the rendered grammar plus monomial terms, e.g.
// "1/2*ff(2) - ff(1)" or "n^2 + 3*n - 1/2".
inline FFPoly parse_ff_poly(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t')
            compact += c;
    if (compact.empty())
        throw detail::ff_parse_error(text);

    FFPoly out;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= compact.size(); ++i) {
        bool at_end = i == compact.size();
        // a sign right after '*', '/', '(', '+' or '-' belongs to the term
        bool separator = !at_end && (compact[i] == '+' || compact[i] == '-') &&
                         compact[i - 1] != '*' && compact[i - 1] != '/' &&
                         compact[i - 1] != '(' && compact[i - 1] != '+' &&
                         compact[i - 1] != '-';
        if (!at_end && !separator)
            continue;
        std::string_view term(compact.data() + start, i - start);
        if (term.empty())
            throw detail::ff_parse_error(text);
        out = out + detail::parse_ff_term(term, text);
        start = i;
    }
    return out;
}

} // namespace binomia
