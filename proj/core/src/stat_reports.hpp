#pragma once

// Internal helpers shared by the oracle estimators and the acceptance suite:
// McReport construction from sample moments, with the 3-standard-error pass
// rule (or a stated absolute tolerance).

#include <cmath>
#include <string>
#include <vector>

#include "infobridge/mc_oracle.hpp"

namespace infobridge::detail {

inline double mean_of(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

inline double sd_of(const std::vector<double>& xs, double mean) {
    if (xs.size() < 2) return 0.0;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

inline McReport report_3se(std::string name, double est, double se, std::size_t n,
                           double target, std::string note = {}) {
    McReport rep;
    rep.name = std::move(name);
    rep.estimate = est;
    rep.std_error = se;
    rep.n_effective = n;
    rep.target = target;
    rep.tolerance = 3.0 * se;
    rep.pass = std::abs(est - target) <= rep.tolerance;
    rep.note = std::move(note);
    return rep;
}

inline McReport report_abs(std::string name, double est, double target, double tol,
                           std::size_t n = 0, std::string note = {}) {
    McReport rep;
    rep.name = std::move(name);
    rep.estimate = est;
    rep.n_effective = n;
    rep.target = target;
    rep.tolerance = tol;
    rep.pass = std::abs(est - target) <= tol;
    rep.note = std::move(note);
    return rep;
}

inline McReport report_mean(std::string name, const std::vector<double>& xs, double target) {
    const double m = mean_of(xs);
    const double se = sd_of(xs, m) / std::sqrt(static_cast<double>(xs.size()));
    return report_3se(std::move(name), m, se, xs.size(), target);
}

/// Sample variance against a target, with the asymptotic s.e. of the
/// variance estimator sqrt((m4 - var^2)/n).
inline McReport report_var(std::string name, const std::vector<double>& xs, double target) {
    const double m = mean_of(xs);
    const double nn = static_cast<double>(xs.size());
    double m2 = 0.0, m4 = 0.0;
    for (double x : xs) {
        const double d = x - m;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    const double var = xs.size() > 1 ? m2 / (nn - 1.0) : 0.0;
    const double se =
        xs.size() > 1 ? std::sqrt(std::max(0.0, m4 / nn - var * var) / nn) : 0.0;
    return report_3se(std::move(name), var, se, xs.size(), target);
}

/// Sample covariance against the zero target.
inline McReport report_cov_zero(std::string name, const std::vector<double>& xs,
                                const std::vector<double>& ys) {
    const double mx = mean_of(xs);
    const double my = mean_of(ys);
    std::vector<double> prod(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) prod[i] = (xs[i] - mx) * (ys[i] - my);
    const double mp = mean_of(prod);
    const double se = sd_of(prod, mp) / std::sqrt(static_cast<double>(prod.size()));
    return report_3se(std::move(name), mp, se, xs.size(), 0.0);
}

}  // namespace infobridge::detail
