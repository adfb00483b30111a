// Acceptance suite: runs every gate criterion end to end and prints one
// pass/fail line per criterion. Exits with the number of failures.
//
// All tolerances are pinned here, in code. Random sampling uses fixed,
// documented seeds so runs are reproducible.

#include "test_support.hpp"

#include <boost/math/special_functions/next.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

using namespace binomia;
using test_support::Rng;
using test_support::run_command;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

struct Harness {
    int failures = 0;
    int index = 0;

    void run(const std::string& label, const std::function<bool()>& body) {
        ++index;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        std::printf("criterion %d: %-58s %s (%.3fs)%s%s\n", index, label.c_str(),
                    ok ? "PASS" : "FAIL", seconds, error.empty() ? "" : " exception: ",
                    error.c_str());
        if (!ok)
            ++failures;
    }
};

// --- 1: the derivation chain yields the five closed-form polynomials ----

bool derivation_chain() {
    auto start = std::chrono::steady_clock::now();
    CoefficientTable table = derive_coefficient_polynomials(5);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = table.size() == 6;
    ok = ok && table.entry(0) == FFPoly::constant(rat(1));
    ok = ok && table.entry(1) == FFPoly::basis(1);            // n
    ok = ok && table.entry(2) == FFPoly::basis(2, rat(1, 2)); // n(n-1)/2
    ok = ok && table.entry(3) == FFPoly::basis(3, rat(1, 6));
    ok = ok && table.entry(4) == FFPoly::basis(4, rat(1, 24));
    ok = ok && table.entry(5) == FFPoly::basis(5, rat(1, 120));
    return ok && seconds < 1.0;
}

// --- 2: derived table == product formula on sampled exact exponents ----

bool equivalence_theorem() {
    auto start = std::chrono::steady_clock::now();
    const std::size_t max_k = 64;
    CoefficientTable table = derive_coefficient_polynomials(max_k);

    std::vector<Rational> rationals = {rat(-1), rat(-2), rat(1, 2), rat(7, 3)};
    Rng rng(424242);
    while (rationals.size() < 100)
        rationals.push_back(rng.rational());

    for (const Rational& n : rationals)
        for (std::size_t k = 0; k <= max_k; ++k)
            if (coefficient_value(table, k, n) != newton_coefficient(n, k))
                return false;

    for (int i = 0; i < 20; ++i) {
        GaussianRational n = rng.nonreal_gaussian();
        for (std::size_t k = 0; k <= max_k; ++k)
            if (coefficient_value(table, k, n) != newton_coefficient(n, k))
                return false;
    }

    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return seconds < 10.0;
}

// --- 3: symbolic recurrence at K = 64 and shift-multiply panel ----------

bool recurrence_and_shift() {
    RecurrenceReport rec = verify_recurrence(derive_coefficient_polynomials(64));
    if (!rec.all_passed || rec.checks.size() != 64)
        return false;
    for (const char* n : {"1/2", "-1", "-2", "7/3", "i", "1+i"})
        if (!shift_multiply_check(Exponent::parse(n), 32).all_passed)
            return false;
    return true;
}

// --- 4: antidifference round trip, pinning, and the lemma instances -----

bool lemma_suite() {
    Rng rng(515151);
    for (int trial = 0; trial < 1000; ++trial) {
        FFPoly m = rng.ff_poly(20);
        FFPoly n = antidifference(m);
        if (forward_difference(n) != m)
            return false;
        if (!ff_eval(n, rat(0)).is_zero())
            return false;
    }
    // the five single-term instances, for a generic rational scale a
    Rational a = rat(5, 7);
    bool ok = antidifference(FFPoly::constant(a)) == FFPoly::basis(1, a);
    ok = ok && antidifference(FFPoly::basis(1, a)) == FFPoly::basis(2, a / rat(2));
    ok = ok && antidifference(FFPoly::basis(2, a)) == FFPoly::basis(3, a / rat(3));
    ok = ok && antidifference(FFPoly::basis(3, a)) == FFPoly::basis(4, a / rat(4));
    ok = ok && antidifference(FFPoly::basis(4, a)) == FFPoly::basis(5, a / rat(5));
    return ok;
}

// --- 5: product formula == repeated multiplication for integer powers ---

bool integer_base_case() {
    for (std::size_t m = 0; m <= 12; ++m)
        if (binomial_series(rat(static_cast<long long>(m)), 16) !=
            integer_power_expand(m, 16))
            return false;
    return true;
}

// --- 6: numeric convergence bounds --------------------------------------

bool numeric_convergence() {
    if (convergence_report(Exponent::parse("1/2"), 0.5, 64).final_error >= 1e-12)
        return false;
    if (convergence_report(Exponent::parse("-1"), 0.5, 64).final_error >= 1e-12)
        return false;
    for (long long m = 0; m <= 12; ++m) {
        ConvergenceReport r = convergence_report(Exponent(m), 0.5, 16);
        if (std::abs(boost::math::float_distance(r.rows.back().partial_sum.real(),
                                                 r.reference.real())) > 8)
            return false;
    }
    return true;
}

// --- 7: exact expansion at K = 1024 stays fast ---------------------------

bool deep_expansion_performance() {
    auto start = std::chrono::steady_clock::now();
    auto series = binomial_series(rat(1, 2), 1024);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = series.order() == 1024;
    ok = ok && series[2] == rat(-1, 8);
    ok = ok && !series[1024].is_zero();
    return ok && seconds < 30.0;
}

// --- 8: deterministic CLI verification -----------------------------------

bool deterministic_verify() {
    const std::string cmd =
        std::string(BINOMIA_CLI_PATH) + " verify --max-order 12 --samples 20 --seed 42";
    auto a = run_command(cmd);
    auto b = run_command(cmd);
    return a.exit_code == 0 && b.exit_code == 0 && !a.output.empty() &&
           a.output == b.output;
}

} // namespace

int main() {
    Harness h;
    h.run("derivation chain reproduces the closed forms (< 1 s)", derivation_chain);
    h.run("table == product formula, 100+20 exponents, k <= 64 (< 10 s)",
          equivalence_theorem);
    h.run("recurrence at K = 64 and shift-multiply panel at K = 32",
          recurrence_and_shift);
    h.run("1000 antidifference round trips + lemma instances", lemma_suite);
    h.run("integer base case m <= 12 at K = 16", integer_base_case);
    h.run("numeric convergence: 1e-12 bounds and 8-ulp terminating cases",
          numeric_convergence);
    h.run("exact expansion at K = 1024 (< 30 s)", deep_expansion_performance);
    h.run("byte-identical seeded verify runs", deterministic_verify);

    std::printf("acceptance: %d/%d criteria passed\n", h.index - h.failures, h.index);
    return h.failures;
}
