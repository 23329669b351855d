#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "cassinian/errors.hpp"

namespace cassinian {

/// Immutable point of the ambient Euclidean space R^n, n >= 1.
/// All coordinates are required to be finite.
class Point {
public:
    Point() = default;

    Point(std::initializer_list<double> coords) : coords_(coords) { validate(); }

    explicit Point(std::vector<double> coords) : coords_(std::move(coords)) { validate(); }

    std::size_t dim() const { return coords_.size(); }

    double operator[](std::size_t i) const { return coords_[i]; }

    std::span<const double> coords() const { return coords_; }

    bool operator==(const Point&) const = default;

private:
    void validate() const {
        if (coords_.empty())
            throw ConfigError("point must have dimension >= 1");
        for (double c : coords_)
            if (!std::isfinite(c))
                throw ConfigError("point coordinate is not finite");
    }

    std::vector<double> coords_;
};

inline void require_same_dim(const Point& x, const Point& y) {
    if (x.dim() != y.dim())
        throw DimensionError("points have different dimensions");
}

/// Euclidean distance |x - y|.  Symmetric bit-for-bit.
inline double euclid_dist(const Point& x, const Point& y) {
    require_same_dim(x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline double norm(const Point& x) {
    double s = 0.0;
    for (double c : x.coords()) s += c * c;
    return std::sqrt(s);
}

inline Point operator+(const Point& a, const Point& b) {
    require_same_dim(a, b);
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] + b[i];
    return Point(std::move(c));
}

inline Point operator-(const Point& a, const Point& b) {
    require_same_dim(a, b);
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] - b[i];
    return Point(std::move(c));
}

inline Point operator*(double s, const Point& a) {
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = s * a[i];
    return Point(std::move(c));
}

/// k-th standard basis vector of R^dim.
inline Point unit_axis(std::size_t dim, std::size_t k) {
    std::vector<double> c(dim, 0.0);
    c.at(k) = 1.0;
    return Point(std::move(c));
}

inline Point zero_point(std::size_t dim) {
    return Point(std::vector<double>(dim, 0.0));
}

} // namespace cassinian
