#pragma once

/*
 * derivation.hpp
 * --------------
 * The symbolic coefficient polynomials of (1+x)^n and the two independent
 * routes to them:
 *
 *   1. the derivation chain: starting from the constant 1, each
 *      coefficient polynomial is the zero-pinned antidifference of its
 *      predecessor, which forces entry k to be (1/k!) * ff_k(n);
 *
 *   2. the product formula: C(n,k) = prod_{i=1..k} (n - i + 1) / i,
 *      evaluated directly at any exact exponent.
 *
 * verify_recurrence checks route 1's defining identity symbolically:
 * differencing entry k must give back entry k-1.
 */

#include "binomia/ff_poly.hpp"

#include <vector>

namespace binomia {

class CoefficientTable {
public:
    CoefficientTable() = default;

    explicit CoefficientTable(std::vector<FFPoly> entries) : entries_(std::move(entries)) {}

    std::size_t size() const { return entries_.size(); }

    const FFPoly& entry(std::size_t k) const {
        if (k >= entries_.size())
            throw std::out_of_range("coefficient index out of range");
        return entries_[k];
    }

    const std::vector<FFPoly>& entries() const { return entries_; }

    friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

private:
    std::vector<FFPoly> entries_;
};

// Entries 0..max_order with entry 0 = 1 and entry k the zero-pinned
// antidifference of entry k-1.
inline CoefficientTable derive_coefficient_polynomials(std::size_t max_order) {
    std::vector<FFPoly> entries;
    entries.reserve(max_order + 1);
    entries.push_back(FFPoly::constant(Rational(BigInt(1))));
    for (std::size_t k = 1; k <= max_order; ++k)
        entries.push_back(antidifference(entries.back()));
    return CoefficientTable(std::move(entries));
}

// C(n,k) by the product formula; exact for any exact scalar n.
template <ExactScalar S>
S newton_coefficient(const S& exponent, std::size_t k) {
    S result = scalar_from_int<S>(1);
    for (std::size_t i = 1; i <= k; ++i) {
        result = result * (exponent - scalar_from_int<S>(static_cast<long long>(i) - 1));
        result = result / scalar_from_int<S>(static_cast<long long>(i));
    }
    return result;
}

inline Scalar newton_coefficient(const Exponent& exponent, std::size_t k) {
    Scalar s = exponent.exact_scalar();
    if (s.is_real())
        return Scalar(newton_coefficient(s.rational(), k));
    return Scalar(newton_coefficient(s.gaussian(), k));
}

// Entry k of the table evaluated at n; agrees with newton_coefficient(n, k)
// on derived tables.
template <ExactScalar S>
S coefficient_value(const CoefficientTable& table, std::size_t k, const S& exponent) {
    return ff_eval(table.entry(k), exponent);
}

inline Scalar coefficient_value(const CoefficientTable& table, std::size_t k,
                                const Exponent& exponent) {
    return ff_eval(table.entry(k), exponent);
}

struct RecurrenceCheck {
    std::size_t index = 0;
    bool passed = false;
};

struct RecurrenceReport {
    std::vector<RecurrenceCheck> checks;
    bool all_passed = true;
};

// Symbolic check that entry_k(n+1) - entry_k(n) == entry_{k-1}(n) for every
// k >= 1; a table of length <= 1 passes vacuously.
inline RecurrenceReport verify_recurrence(const CoefficientTable& table) {
    RecurrenceReport report;
    for (std::size_t k = 1; k < table.size(); ++k) {
        bool ok = forward_difference(table.entry(k)) == table.entry(k - 1);
        report.checks.push_back({k, ok});
        report.all_passed = report.all_passed && ok;
    }
    return report;
}

} // namespace binomia
