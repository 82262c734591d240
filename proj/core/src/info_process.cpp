#include "infobridge/info_process.hpp"

#include <algorithm>
#include <cmath>

#include "infobridge/errors.hpp"

namespace infobridge {

InfoPath simulate_info(std::shared_ptr<const DefaultLaw> law,
                       std::shared_ptr<const PathGrid> grid, RandomStream& rng) {
    if (!law) throw DomainError("null law");
    InfoPath ip;
    ip.tau = law->sample(rng);
    ip.path = simulate_bridge(ip.tau, std::move(grid), rng);
    ip.law = std::move(law);
    return ip;
}

double drift_Z(double beta_val, double tau, double t) {
    if (t < 0.0) throw DomainError("time must be nonnegative");
    if (!(tau > 0.0)) throw DomainError("default time must be positive");
    return t < tau ? beta_val / (tau - t) : 0.0;
}

DecomposedPath decompose(const InfoPath& ip, const DriftEvaluator& filter) {
    const auto& times = ip.times();
    const auto& beta = ip.values();
    DecomposedPath out;
    out.beta = ip;
    out.drift_integral.assign(times.size(), 0.0);
    out.innovation.assign(times.size(), 0.0);

    // ^oZ vanishes at beta = 0, so grid times at or beyond tau contribute 0
    // and no sub-stepping is needed around the default time.
    double prev_oz = 0.0;
    double acc = 0.0;
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double oz =
            (times[i] < ip.tau) ? filter.at_index(i, beta[i]) : 0.0;
        acc += 0.5 * (times[i] - times[i - 1]) * (prev_oz + oz);
        out.drift_integral[i] = acc;
        out.innovation[i] = beta[i] + acc;
        prev_oz = oz;
    }
    return out;
}

std::vector<double> quadratic_variation(const InfoPath& ip) {
    const auto& beta = ip.values();
    std::vector<double> qv(beta.size(), 0.0);
    for (std::size_t i = 1; i < beta.size(); ++i) {
        const double inc = beta[i] - beta[i - 1];
        qv[i] = qv[i - 1] + inc * inc;
    }
    return qv;
}

ZeroDiagnostic default_indicator_diagnostic(const InfoPath& ip, double t, double zero_tol) {
    const auto& times = ip.times();
    const auto it = std::lower_bound(times.begin(), times.end(), t);
    if (it == times.end() || *it != t) throw DomainError("diagnostic time must be on the grid");
    const double x = ip.values()[static_cast<std::size_t>(it - times.begin())];
    const bool looks_zero = std::abs(x) <= zero_tol;
    const bool defaulted = ip.tau <= t;
    if (looks_zero == defaulted) return ZeroDiagnostic::consistent;
    return looks_zero ? ZeroDiagnostic::spurious_zero : ZeroDiagnostic::missed_default;
}

}  // namespace infobridge
