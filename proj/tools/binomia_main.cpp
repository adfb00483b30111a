/*
 * binomia — exact generalized binomial series engine.
 *
 * Subcommands:
 *   expand  exact expansion of (1+x)^n (text, latex or json)
 *   verify  symbolic recurrence, derived-vs-product-formula equivalence
 *           and shift-multiply checks on seeded random exponents
 *   eval    floating-point partial sums against the reference power
 *
 * Exit codes: 0 success (including flagged warnings),
 *             1 verification failure,
 *             2 usage, parse or domain error.
 */

#include <binomia/binomia.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace binomia;

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15e", v);
    return buf;
}

std::string fmt_complex(std::complex<double> z) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.15e%+.15ei", z.real(), z.imag());
    return buf;
}

json complex_json(std::complex<double> z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

// ---------------------------------------------------------------- expand

int run_expand(const std::string& exponent_text, std::size_t order, const std::string& format) {
    Exponent n = Exponent::parse(exponent_text);
    if (n.kind() == ExponentKind::floating) {
        std::cerr << "error: exponent '" << exponent_text
                  << "' is a float literal; expand is exact-only"
                  << " (use an exact rational, e.g. 1/2 instead of 0.5)\n";
        return 2;
    }

    std::string text, latex;
    std::vector<std::string> coeffs;
    if (n.is_complex()) {
        auto s = binomial_series(n.exact_scalar().gaussian(), order);
        text = to_text(s);
        latex = to_latex(s);
        coeffs = coefficient_strings(s);
    } else {
        auto s = binomial_series(n.rational_value(), order);
        text = to_text(s);
        latex = to_latex(s);
        coeffs = coefficient_strings(s);
    }

    if (format == "json") {
        json out;
        out["command"] = "expand";
        out["inputs"] = {{"exponent", exponent_text}, {"order", order}, {"format", format}};
        out["results"] = {{"coefficients", coeffs}, {"text", text}};
        std::cout << out.dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << latex << "\n";
    } else {
        std::cout << text << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- verify

// Small deterministic sampler; plain modulo keeps the draw sequence
// independent of the standard library's distribution internals.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long long pick(long long lo, long long hi) {
        return lo + static_cast<long long>(rng_() %
                                           static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational() {
        return Rational(BigInt(pick(-30, 30)), BigInt(pick(1, 24)));
    }

    GaussianRational gaussian() {
        Rational re = rational();
        long long num = pick(-12, 12);
        if (num == 0)
            num = 1;
        return GaussianRational(re, Rational(BigInt(num), BigInt(pick(1, 12))));
    }

private:
    std::mt19937_64 rng_;
};

int run_verify(std::size_t max_order, std::size_t samples, std::uint64_t seed,
               const std::string& format) {
    CoefficientTable table = derive_coefficient_polynomials(max_order);

    std::size_t checks = 0, failures = 0;
    json recurrence_json = json::array();
    json equivalence_json = json::array();
    json shift_json = json::array();
    std::string text_out;

    auto line = [&](const std::string& s) { text_out += s + "\n"; };

    RecurrenceReport rec = verify_recurrence(table);
    for (const auto& c : rec.checks) {
        ++checks;
        failures += c.passed ? 0 : 1;
        line("recurrence k=" + std::to_string(c.index) + ": " + (c.passed ? "pass" : "FAIL"));
        recurrence_json.push_back({{"k", c.index}, {"passed", c.passed}});
    }

    Sampler sampler(seed);
    std::vector<Exponent> exponents;
    for (std::size_t i = 0; i < samples; ++i)
        exponents.emplace_back(sampler.rational());
    std::size_t complex_samples = std::max<std::size_t>(1, samples / 5);
    for (std::size_t i = 0; i < complex_samples; ++i)
        exponents.emplace_back(sampler.gaussian());

    for (const Exponent& n : exponents) {
        bool ok = true;
        for (std::size_t k = 0; k <= max_order && ok; ++k)
            ok = coefficient_value(table, k, n) == newton_coefficient(n, k);
        ++checks;
        failures += ok ? 0 : 1;
        line("equivalence n=" + n.to_string() + ": " + (ok ? "pass" : "FAIL"));
        equivalence_json.push_back({{"exponent", n.to_string()}, {"passed", ok}});
    }

    // fixed panel plus the first few sampled exponents
    std::vector<Exponent> shift_exponents;
    for (const char* panel : {"1/2", "-1", "-2", "7/3", "i", "1+i"})
        shift_exponents.push_back(Exponent::parse(panel));
    for (std::size_t i = 0; i < exponents.size() && i < 4; ++i)
        shift_exponents.push_back(exponents[i]);
    if (!exponents.empty())
        shift_exponents.push_back(exponents.back());

    for (const Exponent& n : shift_exponents) {
        bool ok = shift_multiply_check(n, max_order).all_passed;
        ++checks;
        failures += ok ? 0 : 1;
        line("shift-multiply n=" + n.to_string() + ": " + (ok ? "pass" : "FAIL"));
        shift_json.push_back({{"exponent", n.to_string()}, {"passed", ok}});
    }

    bool passed = failures == 0;
    if (format == "json") {
        json out;
        out["command"] = "verify";
        out["inputs"] = {{"max_order", max_order}, {"samples", samples},
                         {"seed", seed},           {"format", format}};
        out["results"] = {{"recurrence", recurrence_json},
                          {"equivalence", equivalence_json},
                          {"shift_multiply", shift_json},
                          {"summary", {{"checks", checks}, {"failures", failures},
                                       {"passed", passed}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text_out;
        std::cout << "summary: " << checks << " checks, " << failures << " failures\n";
        std::cout << "result: " << (passed ? "PASS" : "FAIL") << "\n";
    }
    return passed ? 0 : 1;
}

// ---------------------------------------------------------------- eval

int run_eval(const std::string& exponent_text, double x, std::size_t order,
             const std::string& format) {
    Exponent n = Exponent::parse(exponent_text);
    ConvergenceReport report = convergence_report(n, x, order);

    if (format == "json") {
        json rows = json::array();
        for (const auto& r : report.rows) {
            json row;
            row["k"] = r.index;
            if (report.complex_valued)
                row["partial_sum"] = complex_json(r.partial_sum);
            else
                row["partial_sum"] = r.partial_sum.real();
            row["abs_error"] = r.abs_error;
            rows.push_back(row);
        }
        json out;
        out["command"] = "eval";
        out["inputs"] = {{"exponent", exponent_text}, {"x", x},
                         {"order", order},            {"format", format}};
        out["results"] = {{"rows", rows},
                          {"reference", report.complex_valued
                                            ? complex_json(report.reference)
                                            : json(report.reference.real())},
                          {"final_error", report.final_error},
                          {"tail_monotone_from", report.tail_monotone_from}};
        if (report.flagged)
            out["warning"] = report.warning;
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("%-6s %-42s %s\n", "k", "partial_sum", "abs_error");
        for (const auto& r : report.rows) {
            std::string sum = report.complex_valued ? fmt_complex(r.partial_sum)
                                                    : fmt_double(r.partial_sum.real());
            std::printf("%-6zu %-42s %.6e\n", r.index, sum.c_str(), r.abs_error);
        }
        std::string ref = report.complex_valued ? fmt_complex(report.reference)
                                                : fmt_double(report.reference.real());
        std::printf("reference   = %s\n", ref.c_str());
        std::printf("final_error = %.6e\n", report.final_error);
        std::printf("tail monotone from k=%zu\n", report.tail_monotone_from);
        if (report.flagged)
            std::printf("warning: %s\n", report.warning.c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"binomia — exact generalized binomial series engine"};
    app.require_subcommand(1);

    std::string exponent_text;
    std::size_t order = 8;
    std::string format = "text";

    CLI::App* expand = app.add_subcommand("expand", "expand (1+x)^n with exact coefficients");
    expand->add_option("exponent", exponent_text,
                       "exponent n: integer, rational p/q or complex a+bi")
        ->required();
    expand->add_option("--order", order, "truncation order K (default 8)");
    expand->add_option("--format", format, "text, latex or json")
        ->check(CLI::IsMember({"text", "latex", "json"}));

    std::size_t max_order = 16;
    std::size_t samples = 50;
    std::uint64_t seed = 42;
    std::string verify_format = "text";

    CLI::App* verify = app.add_subcommand("verify", "run the symbolic and sampled identity checks");
    verify->add_option("--max-order", max_order, "highest coefficient index checked (>= 1)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--samples", samples, "number of random rational exponents")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "RNG seed; same seed, same output");
    verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string eval_exponent;
    double x = 0.0;
    std::size_t eval_order = 32;
    std::string eval_format = "text";

    CLI::App* eval = app.add_subcommand("eval", "numeric partial sums vs the reference power");
    eval->add_option("exponent", eval_exponent, "exponent n; float literals allowed here")
        ->required();
    eval->add_option("--x", x, "evaluation point")->required()->check(
        [](const std::string& s) {
            try {
                return std::isfinite(std::stod(s)) ? std::string{} : std::string{"x must be finite"};
            } catch (...) {
                return std::string{"x must be a number"};
            }
        });
    eval->add_option("--order", eval_order, "truncation order K (default 32)");
    eval->add_option("--format", eval_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (expand->parsed())
            return run_expand(exponent_text, order, format);
        if (verify->parsed())
            return run_verify(max_order, samples, seed, verify_format);
        return run_eval(eval_exponent, x, eval_order, eval_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
