#include "infobridge/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "infobridge/bayes_filter.hpp"
#include "infobridge/csv.hpp"
#include "infobridge/errors.hpp"
#include "infobridge/parallel.hpp"
#include "stat_reports.hpp"

namespace infobridge {

namespace {

// Exact (tau, beta_t) marginal of the information process: the two-point-grid
// restriction of simulate_info.
void draw_tau_beta(const DefaultLaw& law, double t, RandomStream rng, double& tau, double& x) {
    tau = law.sample(rng);
    if (tau > t) {
        const GaussianKernel k = transition_kernel(tau, 0.0, t, 0.0);
        x = k.mean + std::sqrt(k.variance) * rng.normal();
    } else {
        x = 0.0;
    }
}

}  // namespace

McReport binned_posterior(const DefaultLaw& law, const McConfig& cfg, double t,
                          double x_bin_center, double u) {
    if (!(t > 0.0)) throw DomainError("binned posterior requires t > 0");
    if (!(cfg.bin_width > 0.0)) throw DomainError("bin width must be positive");
    if (cfg.n_paths < 1) throw DomainError("need at least one path");

    std::vector<double> taus(cfg.n_paths);
    std::vector<double> xs(cfg.n_paths);
    const RandomStream master(cfg.master_seed);
    parallel_for(cfg.n_paths, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            draw_tau_beta(law, t, master.substream(i), taus[i], xs[i]);
    });

    const double half = 0.5 * cfg.bin_width;
    std::size_t n_bin = 0;
    std::size_t n_hit = 0;
    for (std::size_t i = 0; i < cfg.n_paths; ++i) {
        if (std::abs(xs[i] - x_bin_center) <= half) {
            ++n_bin;
            if (taus[i] <= u) ++n_hit;
        }
    }
    if (n_bin == 0) throw EmptyBin("no path fell in the conditioning bin");

    McReport rep;
    rep.name = "binned_posterior(t=" + format_double(t) + ",x=" + format_double(x_bin_center) +
               ",u=" + format_double(u) + ")";
    rep.n_effective = n_bin;
    rep.estimate = static_cast<double>(n_hit) / static_cast<double>(n_bin);
    rep.std_error =
        std::sqrt(rep.estimate * (1.0 - rep.estimate) / static_cast<double>(n_bin));
    rep.target = posterior_cdf(law, Observation::at(t, x_bin_center), u);
    rep.tolerance = 3.0 * rep.std_error;
    rep.pass = std::abs(rep.estimate - rep.target) <= rep.tolerance;
    if (n_bin < 100) {
        rep.pass = false;
        rep.note = "insufficient bin (" + std::to_string(n_bin) + " paths)";
    }
    return rep;
}

std::vector<McReport> ensemble_stats(const std::vector<DecomposedPath>& paths, double t) {
    if (paths.empty()) throw DomainError("empty ensemble");
    const auto grid = paths.front().beta.path.grid;
    const auto law = paths.front().beta.law;
    for (const auto& p : paths)
        if (p.beta.path.grid != grid) throw DomainError("paths must share one grid");

    const auto& times = grid->times;
    const auto near_index = [&](double when) {
        const auto it = std::lower_bound(times.begin(), times.end(), when - 1e-12);
        if (it == times.end() || std::abs(*it - when) > 1e-9)
            throw DomainError("requested time is not on the grid");
        return static_cast<std::size_t>(it - times.begin());
    };

    const std::size_t n = paths.size();
    const std::size_t it_idx = near_index(t);
    const std::size_t mid_idx = it_idx / 2;  // grid point near t/2 for increments

    std::vector<double> b_t(n), b_mid(n), qv_t(n);
    for (std::size_t i = 0; i < n; ++i) {
        b_t[i] = paths[i].innovation[it_idx];
        b_mid[i] = paths[i].innovation[mid_idx];
        qv_t[i] = quadratic_variation(paths[i].beta)[it_idx];
    }

    const double target_ttau =
        law ? law->integrate_dF([&](double r) { return std::min(r, t); },
                                {0.0, std::numeric_limits<double>::infinity()})
            : 0.0;

    std::vector<double> inc(n);
    for (std::size_t i = 0; i < n; ++i) inc[i] = b_t[i] - b_mid[i];

    const std::string at = "@t=" + format_double(t);
    std::vector<McReport> reports;
    reports.push_back(detail::report_mean("mean_b" + at, b_t, 0.0));
    reports.push_back(detail::report_var("var_b" + at, b_t, target_ttau));
    reports.push_back(detail::report_mean("mean_qv" + at, qv_t, target_ttau));
    reports.push_back(detail::report_cov_zero("cov_increments" + at, b_mid, inc));
    return reports;
}

}  // namespace infobridge
