#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "cassinian/domain.hpp"
#include "cassinian/errors.hpp"
#include "cassinian/point.hpp"

namespace cassinian {

namespace detail {

inline void require_off_puncture(const Point& p, const Point& x) {
    require_same_dim(p, x);
    if (euclid_dist(p, x) <= kBoundaryGuard)
        throw OnBoundaryError("point lies on the puncture");
}

} // namespace detail

/// Scale-invariant Cassinian metric on the once punctured space:
///   tau_p(x, y) = log(1 + 2 |x-y| / sqrt(|x-p| |y-p|)).
inline double tau_p(const Point& p, const Point& x, const Point& y) {
    detail::require_off_puncture(p, x);
    detail::require_off_puncture(p, y);
    require_same_dim(x, y);
    return std::log1p(2.0 * euclid_dist(x, y) /
                      std::sqrt(euclid_dist(x, p) * euclid_dist(y, p)));
}

/// Average of tau_p over the puncture set of D.
inline double tau_hat(const PuncturedDomain& D, const Point& x, const Point& y) {
    require_in_domain(D, x);
    require_in_domain(D, y);
    double sum = 0.0;
    for (const Point& p : D.punctures()) sum += tau_p(p, x, y);
    return sum / static_cast<double>(D.puncture_count());
}

/// One-parameter Cassinian metric taking the worst puncture, without the
/// factor 2 of tau_p:
///   log(1 + max_p |x-y| / sqrt(|x-p| |p-y|)).
inline double tau_tilde(const PuncturedDomain& D, const Point& x, const Point& y) {
    require_in_domain(D, x);
    require_in_domain(D, y);
    const double dxy = euclid_dist(x, y);
    double worst = 0.0;
    for (const Point& p : D.punctures()) {
        const double q = dxy / std::sqrt(euclid_dist(x, p) * euclid_dist(y, p));
        worst = std::max(worst, q);
    }
    return std::log1p(worst);
}

/// Ibragimov's hyperbolizing metric:
///   u(x, y) = 2 log[(|x-y| + max(d(x), d(y))) / sqrt(d(x) d(y))].
inline double u_metric(const PuncturedDomain& D, const Point& x, const Point& y) {
    const double dx = boundary_dist(D, x);
    const double dy = boundary_dist(D, y);
    const double v =
        2.0 * std::log((euclid_dist(x, y) + std::max(dx, dy)) / std::sqrt(dx * dy));
    return std::max(0.0, v); // argument >= 1; clamp the -1ulp rounding dip
}

/// Distance ratio metric with the minimum boundary distance:
///   log(1 + |x-y| / min(d(x), d(y))).
inline double j_tilde(const PuncturedDomain& D, const Point& x, const Point& y) {
    const double dx = boundary_dist(D, x);
    const double dy = boundary_dist(D, y);
    return std::log1p(euclid_dist(x, y) / std::min(dx, dy));
}

/// Gehring-Osgood distance ratio metric (symmetrized product form).
inline double j_metric(const PuncturedDomain& D, const Point& x, const Point& y) {
    const double dx = boundary_dist(D, x);
    const double dy = boundary_dist(D, y);
    const double dxy = euclid_dist(x, y);
    return 0.5 * (std::log1p(dxy / dx) + std::log1p(dxy / dy));
}

/// Bounded companion of j_tilde: tanh(j_tilde / 2), valued in [0, 1).
inline double j_star(const PuncturedDomain& D, const Point& x, const Point& y) {
    return std::tanh(j_tilde(D, x, y) / 2.0);
}

/// Triangular ratio metric: max_p |x-y| / (|x-p| + |y-p|), valued in [0, 1].
inline double s_metric(const PuncturedDomain& D, const Point& x, const Point& y) {
    require_in_domain(D, x);
    require_in_domain(D, y);
    const double dxy = euclid_dist(x, y);
    double worst = 0.0;
    for (const Point& p : D.punctures())
        worst = std::max(worst, dxy / (euclid_dist(x, p) + euclid_dist(y, p)));
    return worst;
}

enum class MetricFamily { TauP, TauHat, TauTilde, U, JTilde, J, JStar, S };

/// Dispatch tag for the metric evaluators.  TauP carries its base point; the
/// other families take their boundary from the domain.
class MetricKind {
public:
    static MetricKind tauP(Point base) { return MetricKind(MetricFamily::TauP, std::move(base)); }
    static MetricKind tauHat() { return MetricKind(MetricFamily::TauHat); }
    static MetricKind tauTilde() { return MetricKind(MetricFamily::TauTilde); }
    static MetricKind u() { return MetricKind(MetricFamily::U); }
    static MetricKind jTilde() { return MetricKind(MetricFamily::JTilde); }
    static MetricKind j() { return MetricKind(MetricFamily::J); }
    static MetricKind jStar() { return MetricKind(MetricFamily::JStar); }
    static MetricKind s() { return MetricKind(MetricFamily::S); }

    MetricFamily family() const { return family_; }
    const Point& base() const { return *base_; }

    std::string name() const {
        switch (family_) {
        case MetricFamily::TauP: return "tauP";
        case MetricFamily::TauHat: return "tauHat";
        case MetricFamily::TauTilde: return "tauTilde";
        case MetricFamily::U: return "u";
        case MetricFamily::JTilde: return "jTilde";
        case MetricFamily::J: return "j";
        case MetricFamily::JStar: return "jStar";
        case MetricFamily::S: return "s";
        }
        return "?";
    }

private:
    explicit MetricKind(MetricFamily f, std::optional<Point> base = std::nullopt)
        : family_(f), base_(std::move(base)) {}

    MetricFamily family_;
    std::optional<Point> base_;
};

inline double evaluate(const MetricKind& kind, const PuncturedDomain& D, const Point& x,
                       const Point& y) {
    switch (kind.family()) {
    case MetricFamily::TauP: return tau_p(kind.base(), x, y);
    case MetricFamily::TauHat: return tau_hat(D, x, y);
    case MetricFamily::TauTilde: return tau_tilde(D, x, y);
    case MetricFamily::U: return u_metric(D, x, y);
    case MetricFamily::JTilde: return j_tilde(D, x, y);
    case MetricFamily::J: return j_metric(D, x, y);
    case MetricFamily::JStar: return j_star(D, x, y);
    case MetricFamily::S: return s_metric(D, x, y);
    }
    throw ConfigError("unknown metric kind");
}

struct PtolemyReport {
    bool holds;
    double slack; // rhs - lhs of the four-point inequality
};

/// Ptolemy four-point check for the ambient distance:
///   d(a,b) d(c,d) <= d(a,c) d(b,d) + d(a,d) d(b,c).
inline PtolemyReport ptolemy_check(const Point& a, const Point& b, const Point& c,
                                   const Point& d) {
    require_same_dim(a, b);
    require_same_dim(a, c);
    require_same_dim(a, d);
    const double lhs = euclid_dist(a, b) * euclid_dist(c, d);
    const double rhs =
        euclid_dist(a, c) * euclid_dist(b, d) + euclid_dist(a, d) * euclid_dist(b, c);
    const double slack = rhs - lhs;
    return {slack >= -1e-12, slack};
}

struct MetricAxiomsReport {
    bool nonnegative;
    bool identity_ok;      // value < 1e-12 exactly when the points coincide
    double symmetry_slack; // max |m(a,b) - m(b,a)| over the three pairs
    double triangle_slack; // m(x,z) - m(x,y) - m(y,z)
    bool pass;
};

/// Samples the metric axioms on one triple.
inline MetricAxiomsReport metric_axioms_check(const MetricKind& kind, const PuncturedDomain& D,
                                              const Point& x, const Point& y, const Point& z) {
    const double mxy = evaluate(kind, D, x, y);
    const double myz = evaluate(kind, D, y, z);
    const double mxz = evaluate(kind, D, x, z);
    const double myx = evaluate(kind, D, y, x);
    const double mzy = evaluate(kind, D, z, y);
    const double mzx = evaluate(kind, D, z, x);

    MetricAxiomsReport r{};
    r.nonnegative = mxy >= 0.0 && myz >= 0.0 && mxz >= 0.0;
    r.identity_ok = ((mxy < 1e-12) == (x == y)) && ((myz < 1e-12) == (y == z)) &&
                    ((mxz < 1e-12) == (x == z));
    r.symmetry_slack =
        std::max({std::abs(mxy - myx), std::abs(myz - mzy), std::abs(mxz - mzx)});
    r.triangle_slack = mxz - mxy - myz;
    r.pass = r.nonnegative && r.identity_ok && r.symmetry_slack <= 1e-15 &&
             r.triangle_slack <= 1e-12;
    return r;
}

} // namespace cassinian
