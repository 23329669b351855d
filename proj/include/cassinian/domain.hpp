#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cassinian/errors.hpp"
#include "cassinian/point.hpp"

namespace cassinian {

/// Points closer than this to a puncture are treated as lying on the
/// boundary, guarding the 1/sqrt singularities of the metrics.
inline constexpr double kBoundaryGuard = 1e-12;

/// Finitely punctured Euclidean space: the boundary of the domain is exactly
/// the (nonempty) set of punctures.
class PuncturedDomain {
public:
    PuncturedDomain(std::size_t dim, std::vector<Point> punctures)
        : dim_(dim), punctures_(std::move(punctures)) {
        if (dim_ == 0)
            throw ConfigError("domain dimension must be positive");
        if (punctures_.empty())
            throw ConfigError("puncture set must be nonempty");
        for (const Point& p : punctures_)
            if (p.dim() != dim_)
                throw DimensionError("puncture dimension does not match domain");
        for (std::size_t i = 0; i < punctures_.size(); ++i)
            for (std::size_t j = i + 1; j < punctures_.size(); ++j)
                if (euclid_dist(punctures_[i], punctures_[j]) == 0.0)
                    throw ConfigError("punctures must be pairwise distinct");
    }

    std::size_t dim() const { return dim_; }
    const std::vector<Point>& punctures() const { return punctures_; }
    std::size_t puncture_count() const { return punctures_.size(); }

private:
    std::size_t dim_;
    std::vector<Point> punctures_;
};

inline void require_in_domain(const PuncturedDomain& D, const Point& x) {
    if (x.dim() != D.dim())
        throw DimensionError("point dimension does not match domain");
    for (const Point& p : D.punctures())
        if (euclid_dist(x, p) <= kBoundaryGuard)
            throw OnBoundaryError("point lies on a puncture");
}

/// dist(x, boundary) = min over punctures of |x - p|.
inline double boundary_dist(const PuncturedDomain& D, const Point& x) {
    require_in_domain(D, x);
    double best = euclid_dist(x, D.punctures().front());
    for (std::size_t i = 1; i < D.puncture_count(); ++i) {
        const double d = euclid_dist(x, D.punctures()[i]);
        if (d < best) best = d;
    }
    return best;
}

} // namespace cassinian
