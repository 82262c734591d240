#pragma once

#include <memory>
#include <vector>

#include "infobridge/rng.hpp"

namespace infobridge {

/// Strictly increasing time grid starting at 0.
struct PathGrid {
    std::vector<double> times;
    double step_hint = 0.0;

    static PathGrid regular(double t_max, double dt);
    static std::shared_ptr<const PathGrid> make(std::vector<double> times);

    std::size_t size() const { return times.size(); }
    void validate() const;
};

/// One realized trajectory on a grid together with the pinning length
/// (or realized default time) it was generated with.
struct Path {
    std::shared_ptr<const PathGrid> grid;
    std::vector<double> values;
    double pin = 0.0;
};

/// Gaussian transition law; variance 0 denotes the point mass at the mean.
struct GaussianKernel {
    double mean = 0.0;
    double variance = 0.0;
};

/// Density of the bridge of length r at time t, evaluated at x. Equals the
/// Gaussian density with variance t(r-t)/r for 0 < t < r and 0 for t >= r.
/// The degenerate time t = 0 is rejected; callers must branch on it.
double bridge_density(double r, double t, double x);

/// log of bridge_density; -infinity where the density vanishes (t >= r).
double log_bridge_density(double r, double t, double x);

/// E[beta^r_s beta^r_t] = s^t^r - (s^r)(t^r)/r  (^ denoting min).
double bridge_covariance(double r, double s, double t);

/// Law of beta^r_u given beta^r_t = x: for t < u < r a Gaussian with mean
/// x(r-u)/(r-t) and variance (r-u)(u-t)/(r-t); the point mass at 0 for
/// u >= r. Requires t < r (the bridge is absorbed afterwards) and u > t.
GaussianKernel transition_kernel(double r, double t, double u, double x);

/// Exact sequential simulation of the bridge of length r on the grid; values
/// at grid times >= r are exactly zero. Exact in distribution at grid times.
Path simulate_bridge(double r, std::shared_ptr<const PathGrid> grid, RandomStream& rng);

/// B^r_t = beta^r_t + int_0^t beta^r_s / (r-s) ds, accumulated by the
/// trapezoidal rule on the grid; constant after the pin.
Path stopped_bm_from_bridge(const Path& bridge);

}  // namespace infobridge
