#include "infobridge/bridge.hpp"

#include <cmath>
#include <limits>

#include "infobridge/errors.hpp"

namespace infobridge {

namespace {

const double kTwoPi = 2.0 * std::acos(-1.0);

}  // namespace

PathGrid PathGrid::regular(double t_max, double dt) {
    if (!(dt > 0.0)) throw DomainError("grid step must be positive");
    if (!(t_max > 0.0)) throw DomainError("grid horizon must be positive");
    PathGrid grid;
    grid.step_hint = dt;
    const auto n = static_cast<std::size_t>(std::ceil(t_max / dt - 1e-9));
    grid.times.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) grid.times.push_back(std::min(i * dt, t_max));
    grid.validate();
    return grid;
}

std::shared_ptr<const PathGrid> PathGrid::make(std::vector<double> times) {
    PathGrid grid;
    grid.times = std::move(times);
    if (grid.times.size() >= 2)
        grid.step_hint = grid.times[1] - grid.times[0];
    grid.validate();
    return std::make_shared<const PathGrid>(std::move(grid));
}

void PathGrid::validate() const {
    if (times.empty()) throw DomainError("grid must contain at least the origin");
    if (times.front() != 0.0) throw DomainError("grid must start at time 0");
    for (std::size_t i = 0; i + 1 < times.size(); ++i) {
        if (!(times[i] < times[i + 1])) throw DomainError("grid times must be strictly increasing");
        if (!std::isfinite(times[i + 1])) throw DomainError("grid times must be finite");
    }
}

double log_bridge_density(double r, double t, double x) {
    if (!(r > 0.0)) throw DomainError("bridge length must be positive");
    if (!(t > 0.0)) throw DomainError("bridge density is degenerate at t = 0; branch explicitly");
    if (t >= r) return -std::numeric_limits<double>::infinity();
    const double v = t * (r - t) / r;
    // r - t can underflow to 0 inside graded quadrature pieces
    if (!(v > 0.0)) return -std::numeric_limits<double>::infinity();
    return -0.5 * std::log(kTwoPi * v) - x * x / (2.0 * v);
}

double bridge_density(double r, double t, double x) {
    const double lp = log_bridge_density(r, t, x);
    return std::isfinite(lp) ? std::exp(lp) : 0.0;
}

double bridge_covariance(double r, double s, double t) {
    if (!(r > 0.0)) throw DomainError("bridge length must be positive");
    if (s < 0.0 || t < 0.0) throw DomainError("times must be nonnegative");
    const double sr = std::min(s, r);
    const double tr = std::min(t, r);
    return std::min(std::min(s, t), r) - sr * tr / r;
}

GaussianKernel transition_kernel(double r, double t, double u, double x) {
    if (!(r > 0.0)) throw DomainError("bridge length must be positive");
    if (t < 0.0 || !(u > t)) throw DomainError("kernel requires 0 <= t < u");
    if (t >= r)
        throw DomainError("bridge already absorbed at t >= r; the kernel is the point mass at 0");
    if (u >= r) return {0.0, 0.0};
    const double ratio = (r - u) / (r - t);
    return {x * ratio, ratio * (u - t)};
}

Path simulate_bridge(double r, std::shared_ptr<const PathGrid> grid, RandomStream& rng) {
    if (!(r > 0.0)) throw DomainError("bridge length must be positive");
    if (!grid) throw DomainError("null grid");
    Path path;
    path.grid = std::move(grid);
    path.pin = r;
    const auto& times = path.grid->times;
    path.values.assign(times.size(), 0.0);
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (times[i] >= r) break;  // absorbed; values stay exactly 0
        const GaussianKernel k = transition_kernel(r, times[i - 1], times[i], path.values[i - 1]);
        path.values[i] = k.mean + std::sqrt(k.variance) * rng.normal();
    }
    return path;
}

Path stopped_bm_from_bridge(const Path& bridge) {
    const auto& times = bridge.grid->times;
    const auto& v = bridge.values;
    const double r = bridge.pin;
    Path out;
    out.grid = bridge.grid;
    out.pin = r;
    out.values.assign(v.size(), 0.0);
    double acc = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double a = times[i - 1];
        const double b = times[i];
        if (a < r) {
            const double fa = v[i - 1] / (r - a);
            if (b < r) {
                acc += 0.5 * (b - a) * (fa + v[i] / (r - b));
            } else {
                // last sub-interval before the pin, split once at (a+r)/2;
                // the bridge value there is interpolated linearly toward the
                // exact zero at r, which leaves the integrand flat at fa
                const double h = 0.5 * (r - a);
                acc += h * fa + 0.5 * h * fa;
            }
        }
        out.values[i] = v[i] + acc;
    }
    return out;
}

}  // namespace infobridge
