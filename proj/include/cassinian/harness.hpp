#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cassinian/ball.hpp"
#include "cassinian/maps.hpp"
#include "cassinian/metrics.hpp"
#include "cassinian/reports.hpp"
#include "cassinian/rng.hpp"
#include "cassinian/sharpness.hpp"
#include "cassinian/theorems.hpp"

namespace cassinian {

/// Verification-run parameters.  Identical configurations produce bit
/// identical report files: every case draws from its own (seed, case index)
/// stream and results are emitted in case order.
struct RunConfig {
    std::uint64_t seed = 1729;
    std::size_t dimension = 2; // primary ambient dimension (2 or 3)
    std::size_t samples = 12500; // per theorem / per metric kind
    std::map<std::string, double> tolerances; // optional overrides
    std::string output_dir = "verify-out";

    double tol(const std::string& key, double dflt) const {
        const auto it = tolerances.find(key);
        return it == tolerances.end() ? dflt : it->second;
    }

    void validate() const {
        if (samples == 0) throw ConfigError("samples must be positive");
        if (dimension != 2 && dimension != 3) throw ConfigError("dimension must be 2 or 3");
    }
};

enum class Suite { Metrics, Theorems, Density, Inclusion, Convexity, Distortion };

inline const std::array<Suite, 6>& all_suites() {
    static const std::array<Suite, 6> s = {Suite::Metrics,   Suite::Theorems,
                                           Suite::Density,   Suite::Inclusion,
                                           Suite::Convexity, Suite::Distortion};
    return s;
}

inline const char* suite_name(Suite s) {
    switch (s) {
    case Suite::Metrics: return "metrics";
    case Suite::Theorems: return "theorems";
    case Suite::Density: return "density";
    case Suite::Inclusion: return "inclusion";
    case Suite::Convexity: return "convexity";
    case Suite::Distortion: return "distortion";
    }
    return "?";
}

inline Suite suite_from_name(const std::string& name) {
    for (Suite s : all_suites())
        if (name == suite_name(s)) return s;
    throw ConfigError("unknown suite: " + name);
}

using JsonSink = std::function<void(const json&)>;

namespace detail {

inline std::uint64_t case_key(std::uint64_t suite, std::uint64_t sub, std::uint64_t i) {
    return (suite << 56) ^ (sub << 48) ^ i;
}

inline const std::array<TheoremId, 8>& comparison_ids() {
    static const std::array<TheoremId, 8> ids = {
        TheoremId::T_tau_u,   TheoremId::T_tauhat_u, TheoremId::T_tau_jtilde,
        TheoremId::T_tauhat_jtilde, TheoremId::T_tau_j, TheoremId::T_tauhat_j,
        TheoremId::T_tanh_jstar, TheoremId::T_s_tau};
    return ids;
}

struct CaseShape {
    std::size_t dim;
    std::size_t k;
};

/// Rotates every theorem through n in {2,3} and, where the hypothesis allows
/// several punctures, k in {1,2,5}.
inline CaseShape case_shape(TheoremId id, std::size_t i) {
    static const std::size_t ks[3] = {1, 2, 5};
    return {2 + (i % 2), single_puncture_theorem(id) ? 1 : ks[(i / 2) % 3]};
}

} // namespace detail

/// Metric axiom + Ptolemy + invariance fuzz over every metric kind.
inline SuiteSummary run_metrics_suite(const RunConfig& cfg, const JsonSink& sink) {
    SuiteSummary sum{suite_name(Suite::Metrics)};
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t per_kind = std::max<std::size_t>(1, cfg.samples / 8);

    for (std::size_t kindno = 0; kindno < 8; ++kindno) {
        for (std::size_t i = 0; i < per_kind; ++i) {
            CaseRng rng(cfg.seed, detail::case_key(0, kindno, i));
            const std::size_t dim = cfg.dimension;
            const std::size_t k = 1 + (i % 3);
            const PuncturedDomain D = sample_domain(rng, dim, k);
            const MetricKind kind = [&] {
                switch (kindno) {
                case 0: return MetricKind::tauP(D.punctures().front());
                case 1: return MetricKind::tauHat();
                case 2: return MetricKind::tauTilde();
                case 3: return MetricKind::u();
                case 4: return MetricKind::jTilde();
                case 5: return MetricKind::j();
                case 6: return MetricKind::jStar();
                default: return MetricKind::s();
                }
            }();
            const Point x = sample_point(rng, D);
            const Point y = sample_point(rng, D);
            const Point z = sample_point(rng, D);
            const MetricAxiomsReport rep = metric_axioms_check(kind, D, x, y, z);
            const PtolemyReport pt = ptolemy_check(x, y, z, sample_point(rng, D));
            ++sum.cases;
            if (!rep.pass || !pt.holds) ++sum.failures;
            sum.worst_slack = std::min(sum.worst_slack, -rep.triangle_slack);
            sink(json{{"case", i},
                      {"kind", kind.name()},
                      {"pass", rep.pass},
                      {"ptolemy", pt.holds},
                      {"symmetry_slack", rep.symmetry_slack},
                      {"triangle_slack", rep.triangle_slack}});
        }
    }
    sum.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return sum;
}

/// Random-configuration fuzz of the eight comparison theorems.
inline SuiteSummary run_theorems_suite(const RunConfig& cfg, const JsonSink& sink) {
    SuiteSummary sum{suite_name(Suite::Theorems)};
    const auto t0 = std::chrono::steady_clock::now();
    const double slack_tol = cfg.tol("slack", kSlackTol);

    for (std::size_t a = 0; a < detail::comparison_ids().size(); ++a) {
        const TheoremId id = detail::comparison_ids()[a];
        for (std::size_t i = 0; i < cfg.samples; ++i) {
            CaseRng rng(cfg.seed, detail::case_key(1, a, i));
            const auto [dim, k] = detail::case_shape(id, i);
            const PuncturedDomain D = sample_domain(rng, dim, k);
            const Point x = sample_point(rng, D);
            const Point y = sample_point(rng, D);
            for (const TheoremReport& rep : check_theorem(id, D, x, y)) {
                ++sum.cases;
                if (rep.slack < -slack_tol) ++sum.failures;
                sum.worst_slack = std::min(sum.worst_slack, rep.slack);
                json j = to_json(rep);
                j["case"] = i;
                j["n"] = dim;
                j["k"] = k;
                sink(j);
            }
        }
    }
    sum.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return sum;
}

/// Density bounds fuzz plus extrapolated density limits.  The average-metric
/// cases draw equidistant puncture sets, the regime in which the 2/d(x)
/// statements are exact.
inline SuiteSummary run_density_suite(const RunConfig& cfg, const JsonSink& sink) {
    SuiteSummary sum{suite_name(Suite::Density)};
    const auto t0 = std::chrono::steady_clock::now();
    const double slack_tol = cfg.tol("slack", kSlackTol);
    const double limit_tol = cfg.tol("density_limit", 1e-4);
    const std::size_t n_bounds = std::max<std::size_t>(1, cfg.samples);

    for (std::size_t variant = 0; variant < 2; ++variant) {
        for (std::size_t i = 0; i < n_bounds; ++i) {
            CaseRng rng(cfg.seed, detail::case_key(2, variant, i));
            const std::size_t dim = 2 + (i % 2);
            static const std::size_t ks[3] = {1, 2, 5};
            const Point anchor = rng.normal_point(dim);
            const PuncturedDomain D =
                variant == 0
                    ? sample_domain(rng, dim, 1)
                    : sample_equidistant_domain(rng, dim, ks[i % 3], anchor,
                                                rng.uniform(0.3, 1.3));
            const Point x = variant == 0 ? sample_point(rng, D) : anchor;
            const double delta = boundary_dist(D, x);
            const Point u = rng.unit_vector(dim);
            const double rho_frac = rng.uniform(1e-3, 0.999);
            const Point y = x + rho_frac * delta * u;
            const auto reports = variant == 0 ? check_density_bounds(D.punctures().front(), x, y)
                                              : check_density_bounds(D, x, y);
            for (const TheoremReport& rep : reports) {
                ++sum.cases;
                if (rep.slack < -slack_tol) ++sum.failures;
                sum.worst_slack = std::min(sum.worst_slack, rep.slack);
                json j = to_json(rep);
                j["case"] = i;
                sink(j);
            }
        }
    }

    // extrapolated limits on 20 configurations
    const std::array<double, 5> hs = {1e-3, 3e-4, 1e-4, 3e-5, 1e-5};
    for (std::size_t i = 0; i < 20; ++i) {
        CaseRng rng(cfg.seed, detail::case_key(2, 7, i));
        const std::size_t dim = 2 + (i % 2);
        const Point x = rng.normal_point(dim);
        double expected = 0.0;
        double got = 0.0;
        if (i % 2 == 0) {
            Point p = rng.normal_point(dim);
            while (euclid_dist(p, x) < 0.1) p = rng.normal_point(dim);
            expected = 2.0 / euclid_dist(x, p);
            got = density_limit(p, x, rng.unit_vector(dim), hs);
        } else {
            const double rho = rng.uniform(0.3, 1.3);
            static const std::size_t ks[3] = {1, 2, 5};
            const PuncturedDomain D = sample_equidistant_domain(rng, dim, ks[i % 3], x, rho);
            expected = 2.0 / boundary_dist(D, x);
            got = density_limit(D, x, rng.unit_vector(dim), hs);
        }
        const double err = std::abs(got - expected);
        ++sum.cases;
        if (err > limit_tol) ++sum.failures;
        sink(json{{"case", i}, {"check", "density_limit"}, {"limit", got},
                  {"expected", expected}, {"err", err}});
    }
    sum.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return sum;
}

/// Euclidean sandwich of tau-balls on a 20-point grid of radii, in the once
/// punctured plane at e1 and the symmetric twice punctured plane at 0.
inline SuiteSummary run_inclusion_suite(const RunConfig& cfg, const JsonSink& sink) {
    SuiteSummary sum{suite_name(Suite::Inclusion)};
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t rays = 1000;
    const double log3 = std::log(3.0);

    const PuncturedDomain once(2, {Point{0.0, 0.0}});
    const PuncturedDomain twice(2, {Point{1.0, 0.0}, Point{-1.0, 0.0}});
    const Point e1{1.0, 0.0};
    const Point origin{0.0, 0.0};

    for (std::size_t i = 1; i <= 20; ++i) {
        const double t = log3 * static_cast<double>(i) / 21.0;
        for (int which = 0; which < 2; ++which) {
            const InclusionReport rep = which == 0
                                            ? verify_inclusion(once, e1, t, rays, cfg.seed + i)
                                            : verify_inclusion(twice, origin, t, rays, cfg.seed + i);
            ++sum.cases;
            if (!rep.holds) ++sum.failures;
            json j = to_json(rep);
            j["config"] = which == 0 ? "once" : "twice";
            sink(j);
        }
    }
    sum.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return sum;
}

/// Convexity verdict table over the reference radius grid, compared against
/// the classical r <= log 3 dichotomy.  The turning test places the true
/// flip at convexity_threshold() ~= 1.03686 < log 3, so the grid point just
/// below log 3 reports an honest mismatch (see README).
inline SuiteSummary run_convexity_suite(const RunConfig& cfg, const JsonSink& sink) {
    SuiteSummary sum{suite_name(Suite::Convexity)};
    const auto t0 = std::chrono::steady_clock::now();
    const double log3 = std::log(3.0);
    const std::array<double, 10> grid = {0.25,         0.5,  0.75,
                                         1.0,          log3 - 1e-3, log3 + 1e-3,
                                         1.2,          std::log(5.0), 1.8,
                                         std::log(7.0)};
    (void)cfg;
    for (double r : grid) {
        const ConvexityVerdict v = classify_convexity(r, 4096, 1e-9);
        const bool expected_convex = r <= log3;
        const bool match = (v.verdict == Convexity::Convex) == expected_convex;
        ++sum.cases;
        if (!match) ++sum.failures;
        json j = to_json(v);
        j["expected"] = expected_convex ? "Convex" : "NonConvex";
        j["match"] = match;
        sink(j);
    }
    sum.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return sum;
}

/// Bilipschitz distortion of tau_p under the built-in map family, plus
/// linear dilatation estimates.
inline SuiteSummary run_distortion_suite(const RunConfig& cfg, const JsonSink& sink) {
    SuiteSummary sum{suite_name(Suite::Distortion)};
    const auto t0 = std::chrono::steady_clock::now();
    const double slack_tol = cfg.tol("slack", kSlackTol);
    const std::size_t per_map = std::max<std::size_t>(1, cfg.samples / 5);

    struct MapCase {
        TestMap map;
        double dilatation; // exact linear dilatation
    };
    const auto maps_for = [](std::size_t dim) {
        const Point v = dim == 2 ? Point{0.3, -0.2} : Point{0.3, -0.2, 0.1};
        std::vector<MapCase> ms;
        ms.push_back({TestMap::axis_stretch(1.0), 1.0});
        ms.push_back({TestMap::axis_stretch(2.0), 2.0});
        ms.push_back({TestMap::axis_stretch(5.0), 5.0});
        ms.push_back({TestMap::similarity(7.0, 0.7, v), 1.0});
        std::vector<TestMap> comp;
        comp.push_back(TestMap::axis_stretch(2.0));
        comp.push_back(TestMap::similarity(5.0, -0.4, v));
        ms.push_back({TestMap::composite(std::move(comp)), 2.0});
        return ms;
    };

    for (std::size_t dim = 2; dim <= 3; ++dim) {
        const std::vector<MapCase> ms = maps_for(dim);
        for (std::size_t mi = 0; mi < ms.size(); ++mi) {
            for (std::size_t i = 0; i < per_map; ++i) {
                CaseRng rng(cfg.seed, detail::case_key(5, (dim << 4) | mi, i));
                const PuncturedDomain D = sample_domain(rng, dim, 1);
                const Point& p = D.punctures().front();
                const Point x = sample_point(rng, D);
                const Point y = sample_point(rng, D);
                const DistortionReport rep = check_bilipschitz_distortion(ms[mi].map, p, x, y);
                ++sum.cases;
                const double lo = 1.0 / rep.bound, hi = rep.bound;
                if (rep.ratio < lo - slack_tol || rep.ratio > hi + slack_tol) ++sum.failures;
                sum.worst_slack =
                    std::min(sum.worst_slack, std::min(rep.ratio - lo, hi - rep.ratio));
                json j = to_json(rep);
                j["case"] = i;
                j["n"] = dim;
                sink(j);
            }
            // dilatation estimate at a fixed probe point
            CaseRng rng(cfg.seed, detail::case_key(5, (dim << 4) | mi, 1u << 20));
            const Point z = rng.normal_point(dim);
            const std::array<double, 3> rs = {1e-2, 1e-3, 1e-4};
            const double est = linear_dilatation_estimate(ms[mi].map, z, rs, 256);
            const double L = ms[mi].map.bilipschitz_constant();
            const double err = std::abs(est - ms[mi].dilatation);
            ++sum.cases;
            if (err > 1e-6 || est > L * L + 1e-6) ++sum.failures;
            sink(json{{"check", "dilatation"}, {"map", ms[mi].map.describe()}, {"n", dim},
                      {"estimate", est}, {"expected", ms[mi].dilatation}, {"err", err}});
        }
    }
    sum.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return sum;
}

inline SuiteSummary run_suite(Suite s, const RunConfig& cfg, const JsonSink& sink) {
    switch (s) {
    case Suite::Metrics: return run_metrics_suite(cfg, sink);
    case Suite::Theorems: return run_theorems_suite(cfg, sink);
    case Suite::Density: return run_density_suite(cfg, sink);
    case Suite::Inclusion: return run_inclusion_suite(cfg, sink);
    case Suite::Convexity: return run_convexity_suite(cfg, sink);
    case Suite::Distortion: return run_distortion_suite(cfg, sink);
    }
    throw ConfigError("unknown suite");
}

/// Runs the selected suites, streaming one JSON report per line into
/// <output_dir>/<suite>.jsonl and a machine summary into summary.json.
/// Returns the summaries; zero total failures <=> exit code 0.
inline std::vector<SuiteSummary> run_verify(const RunConfig& cfg, const std::vector<Suite>& suites,
                                            std::ostream& human) {
    cfg.validate();
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec) throw IOError("cannot create output directory " + cfg.output_dir);

    std::vector<SuiteSummary> sums;
    for (Suite s : suites) {
        const fs::path path = fs::path(cfg.output_dir) / (std::string(suite_name(s)) + ".jsonl");
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw IOError("cannot open " + path.string());
        const JsonSink sink = [&out](const json& j) { out << j.dump() << '\n'; };
        const SuiteSummary sum = run_suite(s, cfg, sink);
        if (!out) throw IOError("write failure on " + path.string());
        human << "suite " << sum.suite << ": " << sum.cases << " cases, " << sum.failures
              << " failures, worst slack " << sum.worst_slack << ", " << sum.wall_ms << " ms\n";
        sums.push_back(sum);
    }

    json summary = json::array();
    for (const SuiteSummary& s : sums) summary.push_back(to_json(s));
    std::ofstream sfile(fs::path(cfg.output_dir) / "summary.json",
                        std::ios::binary | std::ios::trunc);
    if (!sfile) throw IOError("cannot open summary.json");
    sfile << summary.dump(2) << '\n';
    return sums;
}

} // namespace cassinian
