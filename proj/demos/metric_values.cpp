// Evaluates every metric of the library on a small punctured-plane
// configuration and prints a comparison table.

#include <cstdio>

#include "cassinian/metrics.hpp"
#include "cassinian/theorems.hpp"

int main() {
    using namespace cassinian;

    const PuncturedDomain plane(2, {Point{0.0, 0.0}});
    const Point x{1.0, 0.0};
    const Point y{0.25, 0.0};

    std::printf("punctured plane R^2 \\ {0}, x = (1,0), y = (0.25,0)\n\n");
    std::printf("  tau_p     = %.12f\n", tau_p(Point{0.0, 0.0}, x, y));
    std::printf("  tau_hat   = %.12f\n", tau_hat(plane, x, y));
    std::printf("  tau_tilde = %.12f\n", tau_tilde(plane, x, y));
    std::printf("  u         = %.12f\n", u_metric(plane, x, y));
    std::printf("  j_tilde   = %.12f\n", j_tilde(plane, x, y));
    std::printf("  j         = %.12f\n", j_metric(plane, x, y));
    std::printf("  j_star    = %.12f\n", j_star(plane, x, y));
    std::printf("  s         = %.12f\n", s_metric(plane, x, y));

    std::printf("\ncomparison reports:\n");
    for (TheoremId id : {TheoremId::T_tau_u, TheoremId::T_tau_jtilde, TheoremId::T_tau_j}) {
        for (const TheoremReport& r : check_theorem(id, plane, x, y))
            std::printf("  %-14s %-5s  %.9f <= %.9f  (slack %+.2e)\n", theorem_name(id),
                        r.side.c_str(), r.lhs, r.rhs, r.slack);
    }
    return 0;
}
