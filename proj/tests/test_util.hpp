#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "infobridge/default_law.hpp"

namespace testutil {

inline double mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

inline double variance(const std::vector<double>& xs) {
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return ss / static_cast<double>(xs.size() - 1);
}

inline double std_error_of_mean(const std::vector<double>& xs) {
    return std::sqrt(variance(xs) / static_cast<double>(xs.size()));
}

/// Two-sided Kolmogorov-Smirnov distance between a sample and a CDF given
/// with its left limit. Tied samples are treated as one jump of the
/// empirical CDF, so laws with atoms are handled correctly.
inline double ks_distance_with(std::vector<double> xs,
                               const std::function<double(double)>& cdf,
                               const std::function<double(double)>& cdf_left) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    std::size_t run = 0;
    while (run < xs.size()) {
        std::size_t end = run;
        while (end < xs.size() && xs[end] == xs[run]) ++end;
        d = std::max(d, std::abs(static_cast<double>(end) / n - cdf(xs[run])));
        d = std::max(d, std::abs(cdf_left(xs[run]) - static_cast<double>(run) / n));
        run = end;
    }
    return d;
}

inline double ks_distance(const infobridge::DefaultLaw& law, std::vector<double> xs) {
    const auto cdf = [&](double x) { return law.cdf(x); };
    const auto cdf_left = [&](double x) {
        double atom = 0.0;
        for (const auto& a : law.atoms())
            if (a.location == x) atom = a.weight;
        return law.cdf(x) - atom;
    };
    return ks_distance_with(std::move(xs), cdf, cdf_left);
}

/// 1% critical value of the Kolmogorov distribution.
inline double ks_critical_1pct(std::size_t n) {
    return 1.6276 / std::sqrt(static_cast<double>(n));
}

}  // namespace testutil
