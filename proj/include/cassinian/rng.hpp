#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "cassinian/domain.hpp"
#include "cassinian/point.hpp"

namespace cassinian {

/// Deterministic per-case random stream.  Two instances built from the same
/// (seed, case index) produce identical values on every platform; the suites
/// derive one stream per case so results never depend on evaluation order.
class CaseRng {
public:
    CaseRng(std::uint64_t seed, std::uint64_t case_index) {
        state_ = mix(seed + 0x9E3779B97F4A7C15ull * (case_index + 1));
        if (state_ == 0) state_ = 0x106689D45497FDB5ull;
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Standard normal via Box-Muller (pair cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double m = std::sqrt(-2.0 * std::log(u1));
        spare_ = m * std::sin(6.283185307179586476925286766559 * u2);
        have_spare_ = true;
        return m * std::cos(6.283185307179586476925286766559 * u2);
    }

    Point normal_point(std::size_t dim) {
        std::vector<double> c(dim);
        for (double& v : c) v = normal();
        return Point(std::move(c));
    }

    Point unit_vector(std::size_t dim) {
        for (;;) {
            Point v = normal_point(dim);
            const double n = norm(v);
            if (n > 1e-6) return (1.0 / n) * v;
        }
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Minimum separation enforced by the samplers between distinct punctures and
/// between sampled points and punctures.
inline constexpr double kSampleSeparation = 1e-6;

/// k standard-normal punctures, pairwise at least kSampleSeparation apart.
inline PuncturedDomain sample_domain(CaseRng& rng, std::size_t dim, std::size_t k) {
    std::vector<Point> ps;
    ps.reserve(k);
    while (ps.size() < k) {
        Point cand = rng.normal_point(dim);
        bool ok = true;
        for (const Point& p : ps)
            if (euclid_dist(cand, p) < kSampleSeparation) ok = false;
        if (ok) ps.push_back(std::move(cand));
    }
    return PuncturedDomain(dim, std::move(ps));
}

/// Standard-normal point resampled until clear of every puncture.
inline Point sample_point(CaseRng& rng, const PuncturedDomain& D) {
    for (;;) {
        Point cand = rng.normal_point(D.dim());
        bool ok = true;
        for (const Point& p : D.punctures())
            if (euclid_dist(cand, p) < kSampleSeparation) ok = false;
        if (ok) return cand;
    }
}

/// Domain whose punctures all lie at the same (random) distance rho from the
/// given center.  The average-metric density and inclusion statements compare
/// against 2/d(x) and are exact in this regime.
inline PuncturedDomain sample_equidistant_domain(CaseRng& rng, std::size_t dim, std::size_t k,
                                                 const Point& center, double rho) {
    std::vector<Point> ps;
    ps.reserve(k);
    while (ps.size() < k) {
        Point cand = center + rho * rng.unit_vector(dim);
        bool ok = true;
        for (const Point& p : ps)
            if (euclid_dist(cand, p) < kSampleSeparation) ok = false;
        if (ok) ps.push_back(std::move(cand));
    }
    return PuncturedDomain(dim, std::move(ps));
}

} // namespace cassinian
