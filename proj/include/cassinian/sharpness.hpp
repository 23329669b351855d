#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cassinian/extrapolation.hpp"
#include "cassinian/metrics.hpp"
#include "cassinian/theorems.hpp"

namespace cassinian {

enum class Endpoint { ToZero, ToOne };

inline const char* endpoint_name(Endpoint e) {
    return e == Endpoint::ToZero ? "zero" : "one";
}

/// Ratio scan along the extremal point family of one comparison theorem.
struct SharpnessScan {
    TheoremId theorem;
    Endpoint endpoint;
    std::string family;        // description of the point configuration
    std::vector<double> t_values;
    std::vector<double> ratios;
    double extrapolated_limit = 0.0;
    double claimed_limit = 0.0;
};

namespace detail {

/// num/den evaluations along the family at parameter t, plus whether both
/// quantities diverge at the endpoint (log-type families need the
/// difference-quotient extrapolation).
struct SharpnessFamily {
    std::string description;
    double claimed;
    bool divergent;
    std::function<std::pair<double, double>(double)> eval; // t -> (num, den)
};

inline SharpnessFamily sharpness_family(TheoremId id, Endpoint ep) {
    const Point origin = zero_point(2);
    const Point e1 = unit_axis(2, 0);
    const PuncturedDomain once(2, {origin});
    const PuncturedDomain twice(2, {e1, Point{-1.0, 0.0}});

    const auto axis = [](double t) { return Point{t, 0.0}; };

    switch (id) {
    case TheoremId::T_tau_u:
        if (ep == Endpoint::ToZero)
            return {"x=e1, y=t*e1 in R^2\\{0}; ratio tau/u", 0.5, true,
                    [=](double t) {
                        return std::pair{tau_p(origin, e1, axis(t)), u_metric(once, e1, axis(t))};
                    }};
        break;
    case TheoremId::T_tauhat_u:
        if (ep == Endpoint::ToZero)
            return {"x=-t*e1, y=t*e1 in R^2\\{-e1,e1}; ratio u/tauHat", 1.0, false,
                    [=](double t) {
                        const Point xm{-t, 0.0}, xp{t, 0.0};
                        return std::pair{u_metric(twice, xm, xp), tau_hat(twice, xm, xp)};
                    }};
        break;
    case TheoremId::T_tau_jtilde:
        return {"x=e1, y=t*e1 in R^2\\{0}; ratio jTilde/tau",
                ep == Endpoint::ToZero ? 2.0 : 0.5, ep == Endpoint::ToZero,
                [=](double t) {
                    return std::pair{j_tilde(once, e1, axis(t)), tau_p(origin, e1, axis(t))};
                }};
    case TheoremId::T_tauhat_jtilde:
        if (ep == Endpoint::ToZero)
            return {"x=0, y=t*e1 in R^2\\{-e1,e1}; ratio jTilde/tauHat", 0.5, false,
                    [=](double t) {
                        return std::pair{j_tilde(twice, origin, axis(t)),
                                         tau_hat(twice, origin, axis(t))};
                    }};
        break;
    case TheoremId::T_tau_j:
        return {"x=e1, y=t*e1 in R^2\\{0}; ratio tau/j",
                ep == Endpoint::ToZero ? 1.0 : 2.0, ep == Endpoint::ToZero,
                [=](double t) {
                    return std::pair{tau_p(origin, e1, axis(t)), j_metric(once, e1, axis(t))};
                }};
    case TheoremId::T_tanh_jstar:
        if (ep == Endpoint::ToOne)
            return {"x=e1, y=t*e1 in R^2\\{0}; ratio tanh(tau/2)/jStar", 2.0, false,
                    [=](double t) {
                        return std::pair{std::tanh(tau_p(origin, e1, axis(t)) / 2.0),
                                         j_star(once, e1, axis(t))};
                    }};
        break;
    case TheoremId::T_s_tau:
        // Equality witness (e1, -e1); the ratio is identically 1.
        return {"x=e1, y=-e1 in R^2\\{0}; ratio s/((e^tau-1)/4)", 1.0, false,
                [=](double) {
                    const Point me1{-1.0, 0.0};
                    return std::pair{s_metric(once, e1, me1),
                                     std::expm1(tau_p(origin, e1, me1)) / 4.0};
                }};
    default: break;
    }
    throw ConfigError(std::string("no sharpness family for ") + theorem_name(id) + " toward " +
                      endpoint_name(ep));
}

} // namespace detail

inline bool has_sharpness_family(TheoremId id, Endpoint ep) {
    try {
        detail::sharpness_family(id, ep);
        return true;
    } catch (const ConfigError&) {
        return false;
    }
}

/// Geometric parameter schedule approaching the endpoint: t = 1e-1 .. t_min
/// (ratio 10), or mirrored at 1 for ToOne.
inline std::vector<double> default_t_schedule(Endpoint ep, double t_min = 1e-6) {
    if (!(t_min > 0.0) || t_min >= 0.1)
        throw OutOfRangeError("t_min must lie in (0, 0.1)");
    std::vector<double> ts;
    for (double t = 0.1; t >= t_min * (1.0 - 1e-9); t /= 10.0)
        ts.push_back(ep == Endpoint::ToZero ? t : 1.0 - t);
    return ts;
}

/// Evaluates the extremal family of the theorem on the schedule and
/// extrapolates the ratio to the endpoint.
inline SharpnessScan sharpness_scan(TheoremId id, Endpoint ep,
                                    std::span<const double> t_schedule) {
    const detail::SharpnessFamily fam = detail::sharpness_family(id, ep);
    if (t_schedule.size() < 3)
        throw ConfigError("t schedule needs at least 3 values");
    for (double t : t_schedule)
        if (!(t > 0.0) || !(t < 1.0))
            throw OutOfRangeError("t schedule must lie inside (0, 1)");

    SharpnessScan scan;
    scan.theorem = id;
    scan.endpoint = ep;
    scan.family = fam.description;
    scan.claimed_limit = fam.claimed;

    std::vector<double> nums, dens;
    for (double t : t_schedule) {
        const auto [num, den] = fam.eval(t);
        scan.t_values.push_back(t);
        nums.push_back(num);
        dens.push_back(den);
        scan.ratios.push_back(num / den);
    }

    if (fam.divergent) {
        scan.extrapolated_limit = extrapolate_divergent_ratio(scan.t_values, nums, dens);
    } else {
        // abscissa = distance to the endpoint
        std::vector<double> xs(scan.t_values.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            xs[i] = ep == Endpoint::ToZero ? scan.t_values[i] : 1.0 - scan.t_values[i];
        scan.extrapolated_limit = extrapolate_to_zero(xs, scan.ratios);
    }
    return scan;
}

inline SharpnessScan sharpness_scan(TheoremId id, Endpoint ep, double t_min = 1e-6) {
    const std::vector<double> ts = default_t_schedule(ep, t_min);
    return sharpness_scan(id, ep, ts);
}

} // namespace cassinian
