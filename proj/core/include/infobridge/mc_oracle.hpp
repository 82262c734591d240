#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "infobridge/default_law.hpp"
#include "infobridge/info_process.hpp"
#include "infobridge/run_config.hpp"

namespace infobridge {

struct McConfig {
    std::size_t n_paths = 100000;
    std::shared_ptr<const PathGrid> grid;
    std::uint64_t master_seed = 0;
    double bin_width = 0.01;
};

/// One verification check: estimate vs target, with the pass rule
/// |estimate - target| <= tolerance, where tolerance is 3 standard errors
/// unless the check carries a stated absolute tolerance.
struct McReport {
    std::string name;
    double estimate = 0.0;
    double std_error = 0.0;
    std::size_t n_effective = 0;
    double target = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

/// Empirical Bayes formula: relative frequency of {tau <= u} among paths
/// whose observed value at t falls in the bin around x_bin_center, compared
/// against the closed-form posterior CDF at the bin center. The (tau, beta_t)
/// pairs are the exact two-point-grid marginal of simulate_info.
/// Throws EmptyBin when no path lands in the bin; flags bins with fewer than
/// 100 paths as insufficient (pass = false).
McReport binned_posterior(const DefaultLaw& law, const McConfig& cfg, double t,
                          double x_bin_center, double u);

/// Ensemble statistics of decomposed paths at a grid time t: mean and
/// variance of the innovation (targets 0 and E[t ^ tau]), mean quadratic
/// variation, and the covariance of innovation increments over (0, t/2] and
/// (t/2, t]. Paths must share one grid and law.
std::vector<McReport> ensemble_stats(const std::vector<DecomposedPath>& paths, double t);

struct SuiteResult {
    std::vector<McReport> reports;
    bool all_pass = true;
};

/// Runs every acceptance criterion at the scales implied by the config
/// (mc.n_paths is the base ensemble size), prints one pass/fail line per
/// criterion to log, and writes the machine-readable report CSV with columns
/// check, estimate, std_error, target, tolerance, pass.
SuiteResult run_acceptance_suite(const RunConfig& config, const std::string& report_csv_path,
                                 std::ostream& log);

/// Convenience overload: parses the config file first (ConfigError surfaces
/// parse problems with line numbers).
SuiteResult run_acceptance_suite(const std::string& config_path,
                                 const std::string& report_csv_path, std::ostream& log);

}  // namespace infobridge
