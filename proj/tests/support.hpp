#pragma once

// Shared helpers for the test suites.

#include <cmath>

#include "cassinian/domain.hpp"
#include "cassinian/point.hpp"
#include "cassinian/rng.hpp"

namespace testsupport {

/// Bernoulli inequality, upper branch: log(1 + a x) <= a log(1 + x) for
/// a >= 1, x > 0.  Returns the slack (rhs - lhs).
inline double bernoulli_upper_slack(double a, double x) {
    return a * std::log1p(x) - std::log1p(a * x);
}

/// Lower branch: log(1 + a x) >= a log(1 + x) for a in (0, 1], x > 0.
inline double bernoulli_lower_slack(double a, double x) {
    return std::log1p(a * x) - a * std::log1p(x);
}

inline cassinian::Point translate(const cassinian::Point& p, const cassinian::Point& v) {
    return p + v;
}

inline cassinian::PuncturedDomain translate(const cassinian::PuncturedDomain& D,
                                            const cassinian::Point& v) {
    std::vector<cassinian::Point> ps;
    for (const cassinian::Point& p : D.punctures()) ps.push_back(p + v);
    return cassinian::PuncturedDomain(D.dim(), std::move(ps));
}

} // namespace testsupport
