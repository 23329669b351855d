#pragma once

#include <cmath>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cassinian/errors.hpp"
#include "cassinian/extrapolation.hpp"
#include "cassinian/metrics.hpp"
#include "cassinian/point.hpp"

namespace cassinian {

/// y = scale * R(x) + translation, with R a rotation in the (e1, e2) plane.
/// Euclidean bilipschitz constant max(scale, 1/scale); ratio distortion 1.
struct Similarity {
    double scale = 1.0;
    double angle = 0.0;
    Point translation{0.0, 0.0};
};

/// f(x) = (L x_1, x_2, ..., x_n); exactly L-bilipschitz for L >= 1.
struct AxisStretch {
    double factor = 1.0;
};

/// Test map family: a pipeline of similarity and axis-stretch steps applied
/// left to right.  bilipschitz_constant() is exact for the primitive maps and
/// a valid (product) constant for composites.
class TestMap {
public:
    using Step = std::variant<Similarity, AxisStretch>;

    static TestMap similarity(double scale, double angle, Point translation) {
        if (!(scale > 0.0)) throw ConfigError("similarity scale must be positive");
        TestMap m;
        m.steps_.push_back(Similarity{scale, angle, std::move(translation)});
        return m;
    }

    static TestMap axis_stretch(double factor) {
        if (!(factor >= 1.0)) throw ConfigError("axis stretch factor must be >= 1");
        TestMap m;
        m.steps_.push_back(AxisStretch{factor});
        return m;
    }

    static TestMap composite(std::vector<TestMap> maps) {
        TestMap m;
        for (TestMap& part : maps)
            for (Step& s : part.steps_) m.steps_.push_back(std::move(s));
        return m;
    }

    Point apply(const Point& x) const {
        Point y = x;
        for (const Step& s : steps_) y = apply_step(s, y);
        return y;
    }

    double bilipschitz_constant() const {
        double L = 1.0;
        for (const Step& s : steps_) {
            if (const auto* sim = std::get_if<Similarity>(&s))
                L *= std::max(sim->scale, 1.0 / sim->scale);
            else
                L *= std::get<AxisStretch>(s).factor;
        }
        return L;
    }

    std::string describe() const {
        std::string out;
        for (const Step& s : steps_) {
            if (!out.empty()) out += "*";
            if (const auto* sim = std::get_if<Similarity>(&s))
                out += "similarity(" + std::to_string(sim->scale) + ")";
            else
                out += "stretch(" + std::to_string(std::get<AxisStretch>(s).factor) + ")";
        }
        return out.empty() ? "identity" : out;
    }

private:
    static Point apply_step(const Step& s, const Point& x) {
        if (const auto* sim = std::get_if<Similarity>(&s)) {
            if (x.dim() < 2) throw DimensionError("similarity needs dimension >= 2");
            if (sim->translation.dim() != x.dim())
                throw DimensionError("similarity translation dimension mismatch");
            std::vector<double> c(x.coords().begin(), x.coords().end());
            const double cs = std::cos(sim->angle), sn = std::sin(sim->angle);
            const double a = c[0], b = c[1];
            c[0] = cs * a - sn * b;
            c[1] = sn * a + cs * b;
            for (double& v : c) v *= sim->scale;
            return Point(std::move(c)) + sim->translation;
        }
        const double L = std::get<AxisStretch>(s).factor;
        std::vector<double> c(x.coords().begin(), x.coords().end());
        c[0] *= L;
        return Point(std::move(c));
    }

    std::vector<Step> steps_;
};

inline Point apply_map(const TestMap& f, const Point& x) { return f.apply(x); }

struct DistortionReport {
    std::string map;
    Point p, x, y;
    double tau_before = 0.0;
    double tau_after = 0.0;
    double ratio = 1.0;
    double bound = 1.0; // L^2
    bool holds = false;
};

/// Verifies L^-2 tau_p(x,y) <= tau_f(p)(f(x), f(y)) <= L^2 tau_p(x,y)
/// for the map's bilipschitz constant L.
inline DistortionReport check_bilipschitz_distortion(const TestMap& f, const Point& p,
                                                     const Point& x, const Point& y) {
    DistortionReport rep;
    rep.map = f.describe();
    rep.p = p;
    rep.x = x;
    rep.y = y;
    rep.tau_before = tau_p(p, x, y);
    rep.tau_after = tau_p(f.apply(p), f.apply(x), f.apply(y));
    const double L = f.bilipschitz_constant();
    rep.bound = L * L;
    rep.ratio = rep.tau_before < 1e-15 && rep.tau_after < 1e-15
                    ? 1.0
                    : rep.tau_after / rep.tau_before;
    rep.holds = rep.ratio >= 1.0 / rep.bound - 1e-12 && rep.ratio <= rep.bound + 1e-12;
    return rep;
}

namespace detail {

/// Direction sweep: equispaced circle (2D) or Fibonacci sphere (3D+),
/// augmented with the coordinate axes, which are the extremal directions of
/// the built-in linear maps.
inline std::vector<Point> direction_sweep(std::size_t dim, std::size_t n) {
    std::vector<Point> dirs;
    if (dim == 2) {
        for (std::size_t i = 0; i < n; ++i) {
            const double a = 2.0 * 3.14159265358979323846 * static_cast<double>(i) /
                             static_cast<double>(n);
            dirs.push_back(Point{std::cos(a), std::sin(a)});
        }
    } else {
        const double golden = 2.39996322972865332223; // 2*pi*(1 - 1/phi)
        for (std::size_t i = 0; i < n; ++i) {
            const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double a = golden * static_cast<double>(i);
            std::vector<double> c(dim, 0.0);
            c[0] = rho * std::cos(a);
            c[1] = rho * std::sin(a);
            c[2] = z;
            dirs.push_back(Point(std::move(c)));
        }
    }
    for (std::size_t k = 0; k < dim; ++k) {
        dirs.push_back(unit_axis(dim, k));
        dirs.push_back(-1.0 * unit_axis(dim, k));
    }
    return dirs;
}

} // namespace detail

/// Numeric linear dilatation H(f) at z: the small-radius limit of
/// max_u |f(z + r u) - f(z)| / min_u |f(z + r u) - f(z)| over unit directions,
/// extrapolated over the radius schedule.
inline double linear_dilatation_estimate(const TestMap& f, const Point& z,
                                         std::span<const double> r_schedule,
                                         std::size_t n_directions = 256) {
    if (r_schedule.empty())
        throw ConfigError("empty radius schedule");
    const std::vector<Point> dirs = detail::direction_sweep(z.dim(), n_directions);
    const Point fz = f.apply(z);
    std::vector<double> ratios(r_schedule.size());
    for (std::size_t i = 0; i < r_schedule.size(); ++i) {
        const double r = r_schedule[i];
        if (!(r > 0.0)) throw OutOfRangeError("radii must be positive");
        double lo = 1e300, hi = 0.0;
        for (const Point& u : dirs) {
            const double d = euclid_dist(f.apply(z + r * u), fz);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        ratios[i] = hi / lo;
    }
    if (ratios.size() == 1) return ratios[0];
    return extrapolate_to_zero(r_schedule, ratios);
}

} // namespace cassinian
