#pragma once

#include <cstdint>
#include <string>

#include "infobridge/cds_pricing.hpp"
#include "infobridge/default_law.hpp"

namespace infobridge {

/// Parsed CLI configuration. The file format is a flat list of statements:
///
///   # comment
///   law      { kind = "exponential", rate = 1.0 }
///   grid     { t_max = 2.0, dt = 0.01 }
///   contract { maturity = 1.0, kappa = 0.3, recovery = 1.0, discount_rate = 0.0 }
///   mc       { n_paths = 100000, bin_width = 0.01 }
///   seed = 42
///   out_dir = "out"
///
/// Law kinds and their keys:
///   "exponential": rate            "uniform": a, b
///   "weibull": shape, scale        "atoms": points = [r:w, ...]
///   "piecewise": knots = [t:F, ...]   (repeated t with increasing F = jump)
/// recovery is either a scalar (constant) or a [t:value, ...] breakpoint list.
/// Unknown blocks or keys are rejected; errors carry the offending line.
struct RunConfig {
    DefaultLaw law = DefaultLaw::exponential(1.0);
    double grid_t_max = 2.0;
    double grid_dt = 0.01;
    CdsContract contract;
    std::size_t mc_n_paths = 100000;
    double mc_bin_width = 0.01;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
};

/// Parses a config file; throws ConfigError with a 1-based line number.
RunConfig parse_config_file(const std::string& path);

/// Parses config text (used by tests and by parse_config_file).
RunConfig parse_config_text(const std::string& text);

}  // namespace infobridge
