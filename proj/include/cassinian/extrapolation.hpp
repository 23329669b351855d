#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "cassinian/errors.hpp"

namespace cassinian {

/// Neville polynomial extrapolation of (xs, ys) samples to x = 0.
/// The abscissas must be distinct and nonzero.
inline double extrapolate_to_zero(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw ConfigError("extrapolation needs matching nonempty samples");
    std::vector<double> f(ys.begin(), ys.end());
    const std::size_t n = f.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i)
            f[i] = f[i + 1] + (f[i] - f[i + 1]) * (0.0 - xs[i + m]) / (xs[i] - xs[i + m]);
    return f[0];
}

/// Limit of num(t)/den(t) as t -> 0+ when both sequences diverge like
/// a*log(1/t) + b + (power series in sqrt(t)).  Consecutive differences on the
/// geometric schedule cancel the log terms exactly, leaving difference
/// quotients analytic in sqrt(t); those are extrapolated to zero.
inline double extrapolate_divergent_ratio(std::span<const double> ts,
                                          std::span<const double> nums,
                                          std::span<const double> dens) {
    if (ts.size() < 3 || ts.size() != nums.size() || ts.size() != dens.size())
        throw ConfigError("divergent-ratio extrapolation needs >= 3 samples");
    std::vector<double> xs, qs;
    xs.reserve(ts.size() - 1);
    qs.reserve(ts.size() - 1);
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
        xs.push_back(std::sqrt(ts[k]));
        qs.push_back((nums[k + 1] - nums[k]) / (dens[k + 1] - dens[k]));
    }
    return extrapolate_to_zero(xs, qs);
}

} // namespace cassinian
