// Emits the boundary of one tau_p ball as CSV on stdout and prints its
// regime and convexity verdict.

#include <cstdio>
#include <iostream>

#include "cassinian/ball.hpp"
#include "cassinian/curve_io.hpp"

int main(int argc, char** argv) {
    using namespace cassinian;

    const double r = argc > 1 ? std::atof(argv[1]) : std::log(3.0);
    const BallSpec spec{Point{1.0, 0.0}, Point{0.0, 0.0}, r};
    const BoundaryCurve curve = boundary_curve(spec, 256);
    write_boundary_csv(curve, std::cout);

    const ConvexityVerdict v = classify_convexity(r);
    std::fprintf(stderr, "radius %.6f: regime %s, %s (worst turn %+.3e)\n", r,
                 regime_name(curve.regime),
                 v.verdict == Convexity::Convex ? "convex" : "non-convex", v.worst_turn);
    return 0;
}
