// Walks the antidifference chain that produces the binomial coefficient
// polynomials, prints each one in both bases, and cross-checks a few
// values against the product formula.

#include <binomia/binomia.hpp>

#include <iostream>

using namespace binomia;

namespace {

std::string monomial_string(const FFPoly& p) {
    std::vector<Rational> mono = ff_to_monomial(p);
    if (mono.empty())
        return "0";
    std::string out;
    for (std::size_t j = mono.size(); j-- > 0;) {
        if (mono[j].is_zero())
            continue;
        std::string body;
        std::string var = j == 0 ? "" : (j == 1 ? "n" : "n^" + std::to_string(j));
        if (j == 0)
            body = mono[j].abs().to_string();
        else if (mono[j].abs().is_one())
            body = var;
        else
            body = mono[j].abs().to_string() + "*" + var;
        if (out.empty())
            out += mono[j].is_negative() ? "-" : "";
        else
            out += mono[j].is_negative() ? " - " : " + ";
        out += body;
    }
    return out;
}

} // namespace

int main() {
    const std::size_t max_order = 5;
    CoefficientTable table = derive_coefficient_polynomials(max_order);

    std::cout << "coefficient polynomials of (1+x)^n, derived by repeated\n"
              << "zero-pinned antidifference starting from the constant 1:\n\n";
    for (std::size_t k = 0; k < table.size(); ++k) {
        std::cout << "  c_" << k << "(n) = " << to_string(table.entry(k))
                  << "  =  " << monomial_string(table.entry(k)) << "\n";
    }

    RecurrenceReport rec = verify_recurrence(table);
    std::cout << "\ndifference recurrence delta c_k == c_{k-1}: "
              << (rec.all_passed ? "holds" : "violated") << " for all k <= " << max_order
              << "\n\n";

    for (const char* text : {"5", "1/2", "-1", "i"}) {
        Exponent n = Exponent::parse(text);
        std::cout << "  n = " << text << ":";
        for (std::size_t k = 0; k < table.size(); ++k)
            std::cout << "  " << coefficient_value(table, k, n).to_string();
        std::cout << "\n";
    }

    std::cout << "\neach row equals the product-formula values C(n,k); e.g. C(1/2,2) = "
              << newton_coefficient(Exponent::parse("1/2"), 2).to_string() << "\n";
    return 0;
}
