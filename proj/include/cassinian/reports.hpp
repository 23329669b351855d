#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cassinian/ball.hpp"
#include "cassinian/maps.hpp"
#include "cassinian/metrics.hpp"
#include "cassinian/sharpness.hpp"
#include "cassinian/theorems.hpp"

namespace cassinian {

using json = nlohmann::json;

inline json to_json(const Point& p) {
    return json(std::vector<double>(p.coords().begin(), p.coords().end()));
}

inline json to_json(const TheoremReport& r) {
    return json{{"theorem", theorem_name(r.theorem)}, {"side", r.side}, {"x", to_json(r.x)},
                {"y", to_json(r.y)},                  {"lhs", r.lhs},   {"rhs", r.rhs},
                {"slack", r.slack},                   {"holds", r.holds}};
}

inline json to_json(const DistortionReport& r) {
    return json{{"map", r.map},
                {"p", to_json(r.p)},
                {"x", to_json(r.x)},
                {"y", to_json(r.y)},
                {"tau_before", r.tau_before},
                {"tau_after", r.tau_after},
                {"ratio", r.ratio},
                {"bound", r.bound},
                {"holds", r.holds}};
}

inline json to_json(const SharpnessScan& s) {
    return json{{"theorem", theorem_name(s.theorem)},
                {"endpoint", endpoint_name(s.endpoint)},
                {"family", s.family},
                {"t_values", s.t_values},
                {"ratios", s.ratios},
                {"extrapolated_limit", s.extrapolated_limit},
                {"claimed_limit", s.claimed_limit}};
}

inline json to_json(const ConvexityVerdict& v) {
    json j{{"radius", v.radius},
           {"verdict", v.verdict == Convexity::Convex ? "Convex" : "NonConvex"},
           {"near_threshold", v.near_threshold},
           {"worst_turn", v.worst_turn}};
    if (v.witness) {
        json w = json::array();
        for (const Point& p : *v.witness) w.push_back(to_json(p));
        j["witness"] = w;
    }
    return j;
}

inline json to_json(const InclusionReport& r) {
    return json{{"t", r.t},
                {"rays", r.rays},
                {"inner_violations", r.inner_violations},
                {"outer_violations", r.outer_violations},
                {"holds", r.holds}};
}

/// Per-suite roll-up.  Wall time is reported on stdout only, never in files,
/// so identical configurations produce identical report bytes.
struct SuiteSummary {
    std::string suite;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double worst_slack = 0.0; // most negative slack encountered
    double wall_ms = 0.0;
};

inline json to_json(const SuiteSummary& s) {
    return json{{"suite", s.suite},
                {"cases", s.cases},
                {"failures", s.failures},
                {"worst_slack", s.worst_slack}};
}

} // namespace cassinian
