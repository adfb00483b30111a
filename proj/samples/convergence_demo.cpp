// Partial-sum convergence of the square-root series (1+x)^(1/2) across a
// small grid of evaluation points.

#include <binomia/binomia.hpp>

#include <cstdio>

using namespace binomia;

int main() {
    Exponent n = Exponent::parse("1/2");
    std::printf("%-8s %-22s %-14s %s\n", "x", "partial_sum(K=48)", "abs_error", "note");
    for (double x : {0.1, 0.25, 0.5, 0.75, 0.9, 0.99}) {
        ConvergenceReport r = convergence_report(n, x, 48);
        std::printf("%-8.2f %-22.15f %-14.3e %s\n", x, r.rows.back().partial_sum.real(),
                    r.final_error, r.flagged ? "flagged" : "");
    }
    return 0;
}
