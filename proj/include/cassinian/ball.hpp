#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "cassinian/domain.hpp"
#include "cassinian/errors.hpp"
#include "cassinian/metrics.hpp"
#include "cassinian/point.hpp"
#include "cassinian/rng.hpp"

namespace cassinian {

/// Boundary curves of tau_p-balls in the punctured plane.  Everything is
/// computed in the canonical frame (puncture at the origin, center e1); a
/// general planar BallSpec reduces to it by translate-rotate-scale.
///
/// With c = (e^r - 1)^2/4, a boundary point at polar angle theta and radius t
/// satisfies  t^2 + 1 - 2 t cos(theta) = c t.

/// Regime classification tolerance around the critical coefficient c = 4
/// (r = log 5), where the boundary pinches at (-1, 0).
inline constexpr double kPinchTol = 1e-9;

/// (e^r - 1)^2 / 4.
inline double c_param(double r) {
    if (!(r > 0.0))
        throw OutOfRangeError("ball radius must be positive");
    const double e = std::expm1(r);
    return e * e / 4.0;
}

enum class BallRegime { Sector, Pinched, Annular };

inline const char* regime_name(BallRegime g) {
    switch (g) {
    case BallRegime::Sector: return "sector";
    case BallRegime::Pinched: return "pinched";
    case BallRegime::Annular: return "annular";
    }
    return "?";
}

inline BallRegime ball_regime(double r) {
    const double c = c_param(r);
    if (std::abs(c - 4.0) <= kPinchTol) return BallRegime::Pinched;
    return c < 4.0 ? BallRegime::Sector : BallRegime::Annular;
}

/// Largest admissible polar angle of the boundary, arccos(1 - c/2).
/// nullopt means every angle is admissible (annular regime).
inline std::optional<double> theta_max(double r) {
    const double c = c_param(r);
    const double v = 1.0 - c / 2.0;
    if (v < -1.0 - kPinchTol / 2.0) return std::nullopt;
    return std::acos(std::max(-1.0, std::min(1.0, v)));
}

/// Discriminant of the boundary quadratic, alpha = (2 cos(theta) + c)^2 - 4.
inline double alpha(double r, double theta) {
    const double b = 2.0 * std::cos(theta) + c_param(r);
    return b * b - 4.0;
}

/// d alpha / d theta = -4 sin(theta) (2 cos(theta) + c).
inline double alpha_prime(double r, double theta) {
    return -4.0 * std::sin(theta) * (2.0 * std::cos(theta) + c_param(r));
}

struct PolarRoots {
    double t1; // inner branch, t1 <= 1
    double t2; // outer branch, t1 * t2 = 1
};

/// Both roots of t^2 - (2 cos(theta) + c) t + 1 = 0, or nullopt when the ray
/// misses the boundary.  The larger root comes from the quadratic formula,
/// the smaller from the unit product, so nothing cancels near tangency; a
/// discriminant within rounding of zero is treated as a double root.
inline std::optional<PolarRoots> polar_roots(double r, double theta) {
    const double b = 2.0 * std::cos(theta) + c_param(r);
    double disc = b * b - 4.0;
    if (disc < 0.0) {
        if (disc < -1e-12 * std::max(1.0, b * b)) return std::nullopt;
        disc = 0.0;
    }
    const double t2 = (b + std::sqrt(disc)) / 2.0;
    return PolarRoots{1.0 / t2, t2};
}

/// Tangent slope along the inner branch t1(theta):
///   m1 = (2 sin(theta) tan(theta) + sqrt(alpha)) / (2 sin(theta) - tan(theta) sqrt(alpha)).
/// A vanishing denominator signals a vertical tangent (+-inf), not an error.
inline double slope_m1(double r, double theta) {
    const double a = alpha(r, theta);
    if (!(a > 0.0))
        throw OutOfRangeError("slope is defined only where alpha > 0");
    const double sa = std::sqrt(a);
    const double s = std::sin(theta), tn = std::tan(theta);
    return (2.0 * s * tn + sa) / (2.0 * s - tn * sa);
}

/// Tangent slope along the outer branch t2(theta).
inline double slope_m2(double r, double theta) {
    const double a = alpha(r, theta);
    if (!(a > 0.0))
        throw OutOfRangeError("slope is defined only where alpha > 0");
    const double sa = std::sqrt(a);
    const double s = std::sin(theta), tn = std::tan(theta);
    return (2.0 * s * tn - sa) / (2.0 * s + tn * sa);
}

/// Sign indicator for the derivative of the inner-branch slope:
///   4 sin^2(theta) sqrt(alpha) + sin(theta) alpha' - 2 cos(theta) alpha + alpha^(3/2).
/// Negative values mean the slope is decreasing.  Admissible range:
/// 0 < r <= log 3 and 0 < theta < theta_max(r).
inline double slope_derivative_indicator(double r, double theta) {
    if (!(r > 0.0) || r > std::log(3.0) + 1e-12)
        throw OutOfRangeError("indicator range is 0 < r <= log 3");
    const double a = alpha(r, theta);
    if (!(theta > 0.0) || !(a > 0.0))
        throw OutOfRangeError("indicator range is 0 < theta < theta_max(r)");
    const double sa = std::sqrt(a);
    const double s = std::sin(theta);
    return 4.0 * s * s * sa + s * alpha_prime(r, theta) - 2.0 * std::cos(theta) * a + a * sa;
}

/// Radius at which the boundary vertex on the inner branch (theta = 0) stops
/// curving around the ball: alpha(0) = 4, i.e. (2 + c)^2 = 8.  The turning
/// test confirms this as the exact convexity threshold of the tau_p balls.
inline double convexity_threshold() {
    return std::log(1.0 + 2.0 * std::sqrt(2.0 * std::sqrt(2.0) - 2.0));
}

/// tau_p-ball in the plane: puncture z, center x (x != z), metric radius r.
struct BallSpec {
    Point center{1.0, 0.0};
    Point puncture{0.0, 0.0};
    double radius = 1.0;
};

struct CurveSample {
    double theta; // canonical polar angle
    double t;     // canonical polar radius
    double x, y;  // ambient coordinates (after un-normalizing)
};

struct BoundaryCurve {
    double radius = 0.0;
    BallRegime regime = BallRegime::Sector;
    std::vector<std::vector<CurveSample>> components; // one or two closed loops
};

namespace detail {

struct Frame2D {
    double scale, ux, uy; // rotation column (ux, uy) = image of e1
    double ox, oy;        // puncture position
    std::array<double, 2> map(double a, double b) const {
        return {ox + scale * (ux * a - uy * b), oy + scale * (uy * a + ux * b)};
    }
};

inline Frame2D normalize_frame(const BallSpec& spec) {
    if (spec.center.dim() != 2 || spec.puncture.dim() != 2)
        throw DimensionError("boundary curves are planar; use 2-dimensional specs");
    const double s = euclid_dist(spec.center, spec.puncture);
    if (s <= kBoundaryGuard)
        throw ConfigError("ball center coincides with the puncture");
    return {s, (spec.center[0] - spec.puncture[0]) / s, (spec.center[1] - spec.puncture[1]) / s,
            spec.puncture[0], spec.puncture[1]};
}

inline CurveSample curve_sample(const Frame2D& fr, double theta, double t) {
    const double a = t * std::cos(theta), b = t * std::sin(theta);
    const auto [X, Y] = fr.map(a, b);
    return {theta, t, X, Y};
}

} // namespace detail

/// Discretized boundary of the ball.  Sector regime: one loop running the
/// outer branch over (-theta_max, theta_max) and the inner branch back, with
/// cosine-clustered nodes where the branches meet tangentially.  Pinch
/// regime: the same loop with theta_max = pi, passing through (-1, 0).
/// Annular regime: two full loops enclosing the puncture.
inline BoundaryCurve boundary_curve(const BallSpec& spec, std::size_t n_samples) {
    if (n_samples < 16)
        throw ConfigError("boundary curve needs at least 16 samples");
    const detail::Frame2D fr = detail::normalize_frame(spec);
    const double r = spec.radius;

    BoundaryCurve curve;
    curve.radius = r;
    curve.regime = ball_regime(r);

    // In the pinch regime snap the coefficient to its critical value so the
    // loop closes exactly at (-1, 0).
    const double c = curve.regime == BallRegime::Pinched ? 4.0 : c_param(r);

    const auto roots_at = [&](double theta) {
        const double b = 2.0 * std::cos(theta) + c;
        const double disc = std::max(0.0, b * b - 4.0);
        const double t2 = (b + std::sqrt(disc)) / 2.0;
        return PolarRoots{1.0 / t2, t2};
    };

    if (curve.regime == BallRegime::Annular) {
        const std::size_t n = std::max<std::size_t>(8, n_samples / 2);
        std::vector<CurveSample> outer, inner;
        outer.reserve(n);
        inner.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double theta = -3.14159265358979323846 +
                                 2.0 * 3.14159265358979323846 * static_cast<double>(i) /
                                     static_cast<double>(n);
            const PolarRoots rt = roots_at(theta);
            outer.push_back(detail::curve_sample(fr, theta, rt.t2));
            inner.push_back(detail::curve_sample(fr, theta, rt.t1));
        }
        curve.components.push_back(std::move(outer));
        curve.components.push_back(std::move(inner));
        return curve;
    }

    const double tm = curve.regime == BallRegime::Pinched
                          ? 3.14159265358979323846
                          : std::acos(1.0 - c / 2.0);
    const std::size_t m = std::max<std::size_t>(8, n_samples / 2);
    std::vector<double> thetas(m + 1);
    for (std::size_t j = 0; j <= m; ++j)
        thetas[j] = tm * (-std::cos(3.14159265358979323846 * static_cast<double>(j) /
                                    static_cast<double>(m)));

    std::vector<CurveSample> loop;
    loop.reserve(2 * m);
    for (std::size_t j = 0; j <= m; ++j)
        loop.push_back(detail::curve_sample(fr, thetas[j], roots_at(thetas[j]).t2));
    for (std::size_t j = m - 1; j >= 1; --j)
        loop.push_back(detail::curve_sample(fr, thetas[j], roots_at(thetas[j]).t1));
    curve.components.push_back(std::move(loop));
    return curve;
}

enum class Convexity { Convex, NonConvex };

struct ConvexityVerdict {
    double radius = 0.0;
    Convexity verdict = Convexity::Convex;
    /// Set within 1e-4 of log 3, the classically claimed dichotomy radius.
    bool near_threshold = false;
    /// Three consecutive boundary points making a reflex turn (NonConvex only).
    std::optional<std::array<Point, 3>> witness;
    /// Most negative normalized cross product seen (orientation-adjusted).
    double worst_turn = 0.0;
};

/// Discrete turning test on the polygonal boundary: the ball is convex
/// exactly when all consecutive edge cross products share the loop
/// orientation within tol.  Annular balls are non-convex outright (they
/// enclose the puncture); the witness is taken on the inner loop.
inline ConvexityVerdict classify_convexity(double r, std::size_t n_samples = 4096,
                                           double tol = 1e-9) {
    ConvexityVerdict v;
    v.radius = r;
    v.near_threshold = std::abs(r - std::log(3.0)) < 1e-4;

    const BallSpec canonical{Point{1.0, 0.0}, Point{0.0, 0.0}, r};
    const BoundaryCurve curve = boundary_curve(canonical, n_samples);

    if (curve.regime == BallRegime::Annular) {
        v.verdict = Convexity::NonConvex;
        // Inner loop traversed clockwise (region orientation): theta +h, 0, -h.
        const double h = 2.0 * 3.14159265358979323846 / static_cast<double>(n_samples / 2);
        const auto at = [&](double theta) {
            const PolarRoots rt = *polar_roots(r, theta);
            return Point{rt.t1 * std::cos(theta), rt.t1 * std::sin(theta)};
        };
        v.witness = {at(h), at(0.0), at(-h)};
        v.worst_turn = -1.0;
        return v;
    }

    const std::vector<CurveSample>& loop = curve.components.front();
    std::vector<std::array<double, 2>> q;
    q.reserve(loop.size());
    for (const CurveSample& s : loop) {
        if (!q.empty() && std::hypot(s.x - q.back()[0], s.y - q.back()[1]) < 1e-13) continue;
        q.push_back({s.x, s.y});
    }
    while (q.size() > 2 && std::hypot(q.front()[0] - q.back()[0], q.front()[1] - q.back()[1]) < 1e-13)
        q.pop_back();

    const std::size_t n = q.size();
    double area2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = q[i];
        const auto& b = q[(i + 1) % n];
        area2 += a[0] * b[1] - b[0] * a[1];
    }
    const double orient = area2 >= 0.0 ? 1.0 : -1.0;

    double worst = 1e300;
    std::size_t worst_i = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = q[i];
        const auto& b = q[(i + 1) % n];
        const auto& cpt = q[(i + 2) % n];
        const double e1x = b[0] - a[0], e1y = b[1] - a[1];
        const double e2x = cpt[0] - b[0], e2y = cpt[1] - b[1];
        const double cr = orient * (e1x * e2y - e1y * e2x);
        const double nc = cr / (std::hypot(e1x, e1y) * std::hypot(e2x, e2y));
        if (nc < worst) {
            worst = nc;
            worst_i = i;
        }
    }
    v.worst_turn = worst;
    if (worst < -tol) {
        v.verdict = Convexity::NonConvex;
        const auto& a = q[worst_i];
        const auto& b = q[(worst_i + 1) % n];
        const auto& cpt = q[(worst_i + 2) % n];
        v.witness = {Point{a[0], a[1]}, Point{b[0], b[1]}, Point{cpt[0], cpt[1]}};
    }
    return v;
}

struct InclusionRadii {
    double inner; // Euclidean radius contained in the tau-ball
    double outer; // Euclidean radius containing the tau-ball
};

/// Euclidean sandwich radii of the tau-ball of metric radius t:
///   inner = (e^t - 1)/(e^t + 1) d(x),  outer = (e^t - 1)/(3 - e^t) d(x),
/// valid for 0 <= t < log 3.  outer/inner -> 1 as t -> 0.
inline InclusionRadii inclusion_radii(double t, double dx) {
    if (!(t >= 0.0) || t >= std::log(3.0))
        throw OutOfRangeError("inclusion radii require 0 <= t < log 3");
    if (!(dx > 0.0))
        throw OutOfRangeError("boundary distance must be positive");
    const double e = std::expm1(t);
    return {e / (e + 2.0) * dx, e / (2.0 - e) * dx};
}

struct InclusionReport {
    double t = 0.0;
    std::size_t rays = 0;
    std::size_t inner_violations = 0;
    std::size_t outer_violations = 0;
    bool holds = false;
};

/// Samples the sandwich B_d(x, inner) <= B_tau(x, t) <= B_d(x, outer) on
/// random rays from x with 1e-6 * d(x) margins on both sides.  Uses tau_p for
/// a single puncture and tau_hat otherwise.
inline InclusionReport verify_inclusion(const PuncturedDomain& D, const Point& x, double t,
                                        std::size_t n_rays, std::uint64_t seed = 0) {
    if (!(t > 0.0) || t >= std::log(3.0))
        throw OutOfRangeError("inclusion check requires 0 < t < log 3");
    const double dx = boundary_dist(D, x);
    const InclusionRadii rad = inclusion_radii(t, dx);
    const double eps = 1e-6 * dx;

    const auto metric = [&](const Point& y) {
        return D.puncture_count() == 1 ? tau_p(D.punctures().front(), x, y) : tau_hat(D, x, y);
    };

    InclusionReport rep;
    rep.t = t;
    rep.rays = n_rays;
    CaseRng rng(seed, 0x1C4);
    for (std::size_t i = 0; i < n_rays; ++i) {
        const Point u = rng.unit_vector(D.dim());
        try {
            if (rad.inner - eps > 0.0) {
                const Point a = x + (rad.inner - eps) * u;
                if (!(metric(a) < t)) ++rep.inner_violations;
            }
            const Point b = x + (rad.outer + eps) * u;
            if (!(metric(b) >= t)) ++rep.outer_violations;
        } catch (const OnBoundaryError&) {
            // ray grazed a puncture; measure-zero, skip
        }
    }
    rep.holds = rep.inner_violations == 0 && rep.outer_violations == 0;
    return rep;
}

} // namespace cassinian
