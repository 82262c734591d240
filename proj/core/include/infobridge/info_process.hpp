#pragma once

#include <memory>
#include <vector>

#include "infobridge/bayes_filter.hpp"
#include "infobridge/bridge.hpp"
#include "infobridge/default_law.hpp"
#include "infobridge/rng.hpp"

namespace infobridge {

/// One realized trajectory of the information process together with the
/// default time that generated it. The default time rides along because
/// {beta_t = 0} identifies {tau <= t} only almost surely, never path-wise
/// on a discrete grid.
struct InfoPath {
    Path path;
    double tau = 0.0;
    std::shared_ptr<const DefaultLaw> law;

    const std::vector<double>& times() const { return path.grid->times; }
    const std::vector<double>& values() const { return path.values; }
};

/// Semimartingale pieces of an information path: the accumulated projected
/// drift and the innovation b = beta + int ^oZ ds, which is a Brownian
/// motion stopped at tau in the observation filtration.
struct DecomposedPath {
    InfoPath beta;
    std::vector<double> drift_integral;
    std::vector<double> innovation;
};

enum class ZeroDiagnostic { consistent, spurious_zero, missed_default };

/// Samples tau from the law and, given tau = r, the bridge of length r.
InfoPath simulate_info(std::shared_ptr<const DefaultLaw> law,
                       std::shared_ptr<const PathGrid> grid, RandomStream& rng);

/// Hidden drift Z_t = beta_t / (tau - t) on {t < tau}, else 0.
double drift_Z(double beta_val, double tau, double t);

/// Accumulates the optional projection ^oZ along the path by the trapezoidal
/// rule and forms the innovation. The filter must have been built against the
/// law that generated the path.
DecomposedPath decompose(const InfoPath& ip, const DriftEvaluator& filter);

/// Running sum of squared increments; approximates t ^ tau.
std::vector<double> quadratic_variation(const InfoPath& ip);

/// Statistical check of Prop-3.3-type zero detection at a grid time; never a
/// path-wise truth (the process hits 0 before tau uncountably many times).
ZeroDiagnostic default_indicator_diagnostic(const InfoPath& ip, double t,
                                            double zero_tol = 1e-9);

}  // namespace infobridge
