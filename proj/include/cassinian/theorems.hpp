#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "cassinian/domain.hpp"
#include "cassinian/errors.hpp"
#include "cassinian/extrapolation.hpp"
#include "cassinian/metrics.hpp"
#include "cassinian/point.hpp"

namespace cassinian {

/// Comparison slack below which an inequality counts as violated.
inline constexpr double kSlackTol = 1e-12;

enum class TheoremId {
    T_tau_u,          // tau_p <= u_p <= 2 tau_p            (one puncture)
    T_tauhat_u,       // tau_hat <= u                       (k >= 1)
    T_tau_jtilde,     // j~/2 <= tau_p <= 2 j~              (one puncture)
    T_tauhat_jtilde,  // tau_hat <= 2 j~                    (k >= 1)
    T_tau_j,          // j <= tau_p <= 2 j                  (one puncture)
    T_tauhat_j,       // tau_hat <= 2 j                     (k >= 1)
    T_tanh_jstar,     // j*/2 <= tanh(tau_p/2) <= 2 j*      (one puncture)
    T_s_tau,          // s <= (e^tau_p - 1)/4               (one puncture)
    T_density_once,   // two-sided density bounds for tau_p
    T_density_avg,    // two-sided density bounds for tau_hat
};

inline const char* theorem_name(TheoremId id) {
    switch (id) {
    case TheoremId::T_tau_u: return "T_tau_u";
    case TheoremId::T_tauhat_u: return "T_tauhat_u";
    case TheoremId::T_tau_jtilde: return "T_tau_jtilde";
    case TheoremId::T_tauhat_jtilde: return "T_tauhat_jtilde";
    case TheoremId::T_tau_j: return "T_tau_j";
    case TheoremId::T_tauhat_j: return "T_tauhat_j";
    case TheoremId::T_tanh_jstar: return "T_tanh_jstar";
    case TheoremId::T_s_tau: return "T_s_tau";
    case TheoremId::T_density_once: return "T_density_once";
    case TheoremId::T_density_avg: return "T_density_avg";
    }
    return "?";
}

inline TheoremId theorem_from_name(const std::string& s) {
    for (TheoremId id :
         {TheoremId::T_tau_u, TheoremId::T_tauhat_u, TheoremId::T_tau_jtilde,
          TheoremId::T_tauhat_jtilde, TheoremId::T_tau_j, TheoremId::T_tauhat_j,
          TheoremId::T_tanh_jstar, TheoremId::T_s_tau, TheoremId::T_density_once,
          TheoremId::T_density_avg})
        if (s == theorem_name(id)) return id;
    throw ConfigError("unknown theorem id: " + s);
}

/// Ids whose hypothesis is a once punctured space.
inline bool single_puncture_theorem(TheoremId id) {
    switch (id) {
    case TheoremId::T_tau_u:
    case TheoremId::T_tau_jtilde:
    case TheoremId::T_tau_j:
    case TheoremId::T_tanh_jstar:
    case TheoremId::T_s_tau:
    case TheoremId::T_density_once: return true;
    default: return false;
    }
}

/// One verified inequality lhs <= rhs.  slack = rhs - lhs.
struct TheoremReport {
    TheoremId theorem;
    std::string side; // "lower" or "upper"
    Point x, y;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool holds = false;
};

namespace detail {

inline TheoremReport make_report(TheoremId id, std::string side, const Point& x, const Point& y,
                                 double lhs, double rhs) {
    TheoremReport r{id, std::move(side), x, y, lhs, rhs, rhs - lhs, false};
    r.holds = r.slack >= -kSlackTol;
    return r;
}

} // namespace detail

/// Two-sided density bounds for tau_p around x, valid for |x-y| < |x-p|:
///   log(1 + 2d/(delta + d)) <= tau_p(x,y) <= log(1 + 2d/(delta - d)).
inline std::vector<TheoremReport> check_density_bounds(const Point& p, const Point& x,
                                                       const Point& y) {
    const double d = euclid_dist(x, y);
    const double delta = euclid_dist(x, p);
    if (!(d < delta))
        throw OutOfRangeError("density bounds require |x-y| < |x-p|");
    const double tau = tau_p(p, x, y);
    return {detail::make_report(TheoremId::T_density_once, "lower", x, y,
                                std::log1p(2.0 * d / (delta + d)), tau),
            detail::make_report(TheoremId::T_density_once, "upper", x, y, tau,
                                std::log1p(2.0 * d / (delta - d)))};
}

/// Average-metric variant with delta = d(x).  The lower bound (and the 2/d(x)
/// density limit) is exact when x is equidistant from all punctures; for
/// lopsided puncture sets the reports record honest violations.
inline std::vector<TheoremReport> check_density_bounds(const PuncturedDomain& D, const Point& x,
                                                       const Point& y) {
    const double d = euclid_dist(x, y);
    const double delta = boundary_dist(D, x);
    if (!(d < delta))
        throw OutOfRangeError("density bounds require |x-y| < d(x)");
    const double tau = tau_hat(D, x, y);
    return {detail::make_report(TheoremId::T_density_avg, "lower", x, y,
                                std::log1p(2.0 * d / (delta + d)), tau),
            detail::make_report(TheoremId::T_density_avg, "upper", x, y, tau,
                                std::log1p(2.0 * d / (delta - d)))};
}

/// Evaluates both sides of the comparison theorem on one sample.  Two-sided
/// statements produce a lower and an upper report.
inline std::vector<TheoremReport> check_theorem(TheoremId id, const PuncturedDomain& D,
                                                const Point& x, const Point& y) {
    if (single_puncture_theorem(id) && D.puncture_count() != 1)
        throw ConfigError(std::string(theorem_name(id)) + " requires exactly one puncture");

    const Point& p0 = D.punctures().front();
    switch (id) {
    case TheoremId::T_tau_u: {
        const double tau = tau_p(p0, x, y);
        const double u = u_metric(D, x, y);
        return {detail::make_report(id, "lower", x, y, tau, u),
                detail::make_report(id, "upper", x, y, u, 2.0 * tau)};
    }
    case TheoremId::T_tauhat_u:
        return {detail::make_report(id, "upper", x, y, tau_hat(D, x, y), u_metric(D, x, y))};
    case TheoremId::T_tau_jtilde: {
        const double tau = tau_p(p0, x, y);
        const double jt = j_tilde(D, x, y);
        return {detail::make_report(id, "lower", x, y, 0.5 * jt, tau),
                detail::make_report(id, "upper", x, y, tau, 2.0 * jt)};
    }
    case TheoremId::T_tauhat_jtilde:
        return {detail::make_report(id, "upper", x, y, tau_hat(D, x, y),
                                    2.0 * j_tilde(D, x, y))};
    case TheoremId::T_tau_j: {
        const double tau = tau_p(p0, x, y);
        const double j = j_metric(D, x, y);
        return {detail::make_report(id, "lower", x, y, j, tau),
                detail::make_report(id, "upper", x, y, tau, 2.0 * j)};
    }
    case TheoremId::T_tauhat_j:
        return {detail::make_report(id, "upper", x, y, tau_hat(D, x, y),
                                    2.0 * j_metric(D, x, y))};
    case TheoremId::T_tanh_jstar: {
        const double th = std::tanh(tau_p(p0, x, y) / 2.0);
        const double js = j_star(D, x, y);
        return {detail::make_report(id, "lower", x, y, 0.5 * js, th),
                detail::make_report(id, "upper", x, y, th, 2.0 * js)};
    }
    case TheoremId::T_s_tau:
        return {detail::make_report(id, "upper", x, y, s_metric(D, x, y),
                                    std::expm1(tau_p(p0, x, y)) / 4.0)};
    case TheoremId::T_density_once: return check_density_bounds(p0, x, y);
    case TheoremId::T_density_avg: return check_density_bounds(D, x, y);
    }
    throw ConfigError("unknown theorem id");
}

namespace detail {

template <class Metric>
double density_limit_impl(Metric&& metric, const Point& x, const Point& direction,
                          std::span<const double> h_schedule, double validity_radius) {
    if (h_schedule.empty())
        throw ConfigError("empty h schedule");
    const double n = norm(direction);
    if (std::abs(n - 1.0) > 1e-9)
        throw ConfigError("direction must be a unit vector");
    std::vector<double> ys(h_schedule.size());
    for (std::size_t i = 0; i < h_schedule.size(); ++i) {
        const double h = h_schedule[i];
        if (!(h > 0.0) || h >= validity_radius)
            throw OutOfRangeError("h schedule leaves the validity ball");
        ys[i] = metric(x + h * direction) / h;
    }
    return extrapolate_to_zero(h_schedule, ys);
}

} // namespace detail

/// Richardson-extrapolated limit of tau_p(x, x + h u)/h as h -> 0.
/// The limit equals 2/|x-p|.
inline double density_limit(const Point& p, const Point& x, const Point& direction,
                            std::span<const double> h_schedule) {
    const double delta = euclid_dist(x, p);
    return detail::density_limit_impl([&](const Point& y) { return tau_p(p, x, y); }, x,
                                      direction, h_schedule, delta);
}

/// Average-metric variant; the limit equals the mean of 2/|x-p_i| over the
/// punctures (2/d(x) when x is equidistant from all of them).
inline double density_limit(const PuncturedDomain& D, const Point& x, const Point& direction,
                            std::span<const double> h_schedule) {
    const double delta = boundary_dist(D, x);
    return detail::density_limit_impl([&](const Point& y) { return tau_hat(D, x, y); }, x,
                                      direction, h_schedule, delta);
}

} // namespace cassinian
