#pragma once

/*
 * numeric.hpp
 * -----------
 * Floating-point evaluation of truncated binomial series and comparison
 * against a reference power function.
 *
 * Exact coefficients are converted to double (or complex<double>) one at
 * a time; partial sums are then accumulated in floating point as
 *
 *     P_j = P_{j-1} + c_j * x^j,   with x^j built up by repeated
 *                                  multiplication,
 *
 * which is the consumer-facing evaluation pattern this module validates.
 *
 * The reference is the principal branch: (1+x)^n = exp(n * ln(1+x)),
 * defined here only for 1 + x > 0. Convergence of the series itself is
 * only demonstrated, never assumed: reports for |x| >= 1 with a
 * non-terminating exponent are flagged rather than rejected.
 */

#include "binomia/series.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace binomia {

inline std::vector<double> eval_partial_sums(const std::vector<double>& coeffs, double x) {
    std::vector<double> sums;
    sums.reserve(coeffs.size());
    double acc = 0.0;
    double xpow = 1.0;
    for (double c : coeffs) {
        acc += c * xpow;
        sums.push_back(acc);
        xpow *= x;
    }
    return sums;
}

inline std::vector<double> eval_partial_sums(const TruncatedSeries<Rational>& s, double x) {
    std::vector<double> coeffs;
    coeffs.reserve(s.order() + 1);
    for (const Rational& c : s.coefficients())
        coeffs.push_back(c.to_double());
    return eval_partial_sums(coeffs, x);
}

inline std::vector<std::complex<double>> eval_partial_sums(const TruncatedSeries<GaussianRational>& s,
                                                           double x) {
    std::vector<std::complex<double>> sums;
    sums.reserve(s.order() + 1);
    std::complex<double> acc = 0.0;
    double xpow = 1.0;
    for (const GaussianRational& c : s.coefficients()) {
        acc += std::complex<double>(c.re().to_double(), c.im().to_double()) * xpow;
        sums.push_back(acc);
        xpow *= x;
    }
    return sums;
}

// Product-formula coefficients computed directly in double; the path for
// float-kind exponents.
inline std::vector<double> binomial_coefficients_fp(double exponent, std::size_t order) {
    std::vector<double> c;
    c.reserve(order + 1);
    c.push_back(1.0);
    for (std::size_t k = 1; k <= order; ++k)
        c.push_back(c.back() * (exponent - static_cast<double>(k) + 1.0) /
                    static_cast<double>(k));
    return c;
}

inline double checked_log1p_base(double x) {
    if (!(1.0 + x > 0.0))
        throw std::domain_error("outside principal real domain");
    return std::log(1.0 + x);
}

// (1+x)^n to machine precision, principal branch. Real for real exponents,
// complex for Gaussian-rational ones (imaginary part 0 in the real case).
inline std::complex<double> reference_power(const Exponent& exponent, double x) {
    double log_base = checked_log1p_base(x);
    if (exponent.kind() == ExponentKind::complex_rational)
        return std::exp(exponent.to_complex() * log_base);
    return {std::pow(1.0 + x, exponent.to_double()), 0.0};
}

inline double reference_power_real(const Exponent& exponent, double x) {
    if (exponent.kind() == ExponentKind::complex_rational)
        throw std::domain_error("exponent is complex");
    checked_log1p_base(x);
    return std::pow(1.0 + x, exponent.to_double());
}

struct ConvergenceRow {
    std::size_t index = 0;
    std::complex<double> partial_sum{};
    double abs_error = 0.0;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    std::complex<double> reference{};
    double final_error = 0.0;
    std::size_t tail_monotone_from = 0; // abs_error is nonincreasing from this row on
    bool complex_valued = false;
    bool flagged = false; // outside the validated |x| < 1 domain
    std::string warning;  // empty unless flagged
};

// A non-terminating series has validated convergence only for |x| < 1;
// terminating ones (nonnegative integer exponents, including float-kind
// values that are exact nonnegative integers) are polynomials.
inline bool terminating_exponent(const Exponent& exponent) {
    if (exponent.is_nonnegative_integer())
        return true;
    if (exponent.kind() == ExponentKind::floating) {
        double f = exponent.float_value();
        return f >= 0.0 && std::floor(f) == f;
    }
    return false;
}

inline ConvergenceReport convergence_report(const Exponent& exponent, double x,
                                            std::size_t order) {
    if (!std::isfinite(x))
        throw std::invalid_argument("x must be finite");

    ConvergenceReport report;
    report.complex_valued = exponent.is_complex();
    report.reference = reference_power(exponent, x);

    std::vector<std::complex<double>> sums;
    if (exponent.is_complex()) {
        auto series = binomial_series(exponent.exact_scalar().gaussian(), order);
        sums = eval_partial_sums(series, x);
    } else {
        std::vector<double> real_sums;
        if (exponent.kind() == ExponentKind::floating)
            real_sums = eval_partial_sums(binomial_coefficients_fp(exponent.float_value(), order), x);
        else
            real_sums = eval_partial_sums(binomial_series(exponent.rational_value(), order), x);
        sums.assign(real_sums.begin(), real_sums.end());
    }

    report.rows.reserve(sums.size());
    for (std::size_t k = 0; k < sums.size(); ++k)
        report.rows.push_back({k, sums[k], std::abs(sums[k] - report.reference)});
    report.final_error = report.rows.back().abs_error;

    std::size_t from = report.rows.size() - 1;
    while (from > 0 && report.rows[from - 1].abs_error >= report.rows[from].abs_error)
        --from;
    report.tail_monotone_from = from;

    if (std::abs(x) >= 1.0 && !terminating_exponent(exponent)) {
        report.flagged = true;
        report.warning = "outside |x|<1: divergent or conditionally convergent; "
                         "results not validated";
    }
    return report;
}

} // namespace binomia
