// Command-line front end: simulate / posterior / predict / price / spread /
// verify, driven by a single config file. Exit codes: 0 ok, 1 domain error,
// 2 config error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "infobridge/bayes_filter.hpp"
#include "infobridge/cds_pricing.hpp"
#include "infobridge/csv.hpp"
#include "infobridge/errors.hpp"
#include "infobridge/info_process.hpp"
#include "infobridge/mc_oracle.hpp"
#include "infobridge/run_config.hpp"

namespace fs = std::filesystem;
using namespace infobridge;

namespace {

struct CommonArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
};

RunConfig load_config(const CommonArgs& args) {
    RunConfig cfg = parse_config_file(args.config_path);
    // precedence: --seed > BRIDGE_INFO_SEED > config file
    if (const char* env = std::getenv("BRIDGE_INFO_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw ConfigError("BRIDGE_INFO_SEED must be a nonnegative integer");
        }
    }
    if (args.seed) cfg.seed = *args.seed;
    if (args.out) cfg.out_dir = *args.out;
    return cfg;
}

fs::path ensure_out_dir(const RunConfig& cfg) {
    fs::path dir(cfg.out_dir);
    if (!dir.empty()) fs::create_directories(dir);
    return dir;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream os(path);
    if (!os) throw Error("cannot write '" + path.string() + "'");
    return os;
}

Observation observation_or_die(double t, double x) {
    const Observation obs = Observation::at(t, x);
    if (obs.defaulted)
        throw DefaultedNeedsTau(
            "beta_t = 0 at t > 0 lies on the defaulted branch almost surely; "
            "conditional quantities there need the realized default time");
    return obs;
}

int cmd_simulate(const RunConfig& cfg, std::size_t n) {
    const auto dir = ensure_out_dir(cfg);
    const auto law = std::make_shared<DefaultLaw>(cfg.law);
    const auto grid =
        std::make_shared<const PathGrid>(PathGrid::regular(cfg.grid_t_max, cfg.grid_dt));
    const DriftEvaluator filter(*law, grid);

    auto manifest = open_out(dir / "manifest.csv");
    CsvWriter mrows(manifest, {"path_id", "file", "master_seed", "substream", "tau"});

    const RandomStream master(cfg.seed);
    for (std::size_t i = 0; i < n; ++i) {
        RandomStream rng = master.substream(i);
        const InfoPath ip = simulate_info(law, grid, rng);
        const DecomposedPath dp = decompose(ip, filter);
        const std::vector<double> qv = quadratic_variation(ip);

        char name[32];
        std::snprintf(name, sizeof(name), "path_%05zu.csv", i);
        auto os = open_out(dir / name);
        CsvWriter rows(os, {"t", "beta", "b", "qv", "tau"});
        for (std::size_t k = 0; k < ip.times().size(); ++k)
            rows.row_values({ip.times()[k], ip.values()[k], dp.innovation[k], qv[k], ip.tau});
        mrows.row({std::to_string(i), name, std::to_string(cfg.seed), std::to_string(i),
                   format_double(ip.tau)});
    }
    std::cout << "wrote " << n << " path file(s) and manifest to " << dir.string() << '\n';
    return 0;
}

int cmd_posterior(const RunConfig& cfg, double t, double x, double u_max) {
    const auto dir = ensure_out_dir(cfg);
    if (u_max <= t) throw DomainError("--u-max must exceed --t");
    const Observation obs = t == 0.0 ? Observation::at(0.0, 0.0) : observation_or_die(t, x);

    auto os = open_out(dir / "posterior_cdf.csv");
    CsvWriter rows(os, {"u", "posterior_cdf"});
    double prev = 0.0;
    for (double u = t; u <= u_max + 1e-12; u += cfg.grid_dt) {
        const double c = posterior_cdf(cfg.law, obs, u);
        prev = std::max(prev, std::min(1.0, c));  // clamp quadrature jitter
        rows.row_values({u, prev});
    }

    if (t > 0.0) {
        auto ws = open_out(dir / "posterior_weights.csv");
        CsvWriter wrows(ws, {"r", "phi"});
        const PosteriorCurve curve(cfg.law, obs);
        for (double r = t; r <= u_max + 1e-12; r += cfg.grid_dt)
            wrows.row_values({r, curve.density_weight(r)});
    }
    std::cout << "wrote posterior curve to " << dir.string() << '\n';
    return 0;
}

int cmd_predict(const RunConfig& cfg, double t, double x, double u_max) {
    const auto dir = ensure_out_dir(cfg);
    if (u_max <= t) throw DomainError("--u-max must exceed --t");
    const Observation obs = t == 0.0 ? Observation::at(0.0, 0.0) : observation_or_die(t, x);

    auto os = open_out(dir / "predict.csv");
    CsvWriter rows(os, {"u", "mean_beta", "zero_mass"});
    for (double u = t + cfg.grid_dt; u <= u_max + 1e-12; u += cfg.grid_dt) {
        rows.row_values({u, predict_mean_beta(cfg.law, obs, u),
                         predict_zero_mass(cfg.law, obs, u)});
    }
    std::cout << "wrote predictive curve to " << dir.string() << '\n';
    return 0;
}

int cmd_price_spread(const RunConfig& cfg, double t, double x) {
    const Observation obs = t == 0.0 ? Observation::at(0.0, 0.0) : observation_or_die(t, x);
    const bool zero_rate = cfg.contract.discount_rate == 0.0;

    const double ph = zero_rate
                          ? price_H(cfg.law, cfg.contract, t, true).price
                          : price_discounted(cfg.law, cfg.contract, obs, Filtration::H).price;
    const double pb =
        zero_rate ? price_beta(cfg.law, cfg.contract, obs).price
                  : price_discounted(cfg.law, cfg.contract, obs, Filtration::F_beta).price;
    const double sh = fair_spread(cfg.law, cfg.contract, obs, Filtration::H);
    const double sb = fair_spread(cfg.law, cfg.contract, obs, Filtration::F_beta);

    CsvWriter rows(std::cout,
                   {"t", "x", "price_H", "price_beta", "spread_H", "spread_beta"});
    rows.row_values({t, x, ph, pb, sh, sb});
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    const auto dir = ensure_out_dir(cfg);
    const SuiteResult result =
        run_acceptance_suite(cfg, (dir / "acceptance_report.csv").string(), std::cout);
    std::cout << (result.all_pass ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << " ("
              << result.reports.size() << " checks; report: "
              << (dir / "acceptance_report.csv").string() << ")\n";
    return result.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brownian bridge information-process toolkit"};
    app.require_subcommand(1);

    CommonArgs common;
    double t = 0.0, x = 0.0, u_max = 0.0;
    std::size_t n = 1;
    bool u_max_set = false;

    const auto add_common = [&](CLI::App* sub, bool needs_tx) {
        sub->add_option("--config", common.config_path, "config file path")->required();
        sub->add_option("--seed", common.seed, "master seed (overrides config and env)");
        sub->add_option("--out", common.out, "output directory (overrides config)");
        if (needs_tx) {
            sub->add_option("--t", t, "observation time")->required();
            sub->add_option("--x", x, "observed value of the information process")
                ->required();
        }
    };

    auto* simulate = app.add_subcommand("simulate", "simulate information-process paths");
    add_common(simulate, false);
    simulate->add_option("--n", n, "number of paths");

    auto* posterior =
        app.add_subcommand("posterior", "posterior law of the default time given beta_t");
    add_common(posterior, true);
    posterior->add_option("--u-max", u_max, "largest horizon in the emitted curve")
        ->each([&](const std::string&) { u_max_set = true; });

    auto* predict = app.add_subcommand("predict", "predictive law of beta_u given beta_t");
    add_common(predict, true);
    predict->add_option("--u-max", u_max, "largest horizon in the emitted curve")
        ->each([&](const std::string&) { u_max_set = true; });

    auto* price = app.add_subcommand("price", "CDS price under both filtrations");
    add_common(price, true);
    auto* spread = app.add_subcommand("spread", "fair CDS spread under both filtrations");
    add_common(spread, true);

    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    add_common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad invocation reads as a config error
    }

    try {
        const RunConfig cfg = load_config(common);
        if (!u_max_set) u_max = 50.0 * cfg.law.mean();
        if (simulate->parsed()) return cmd_simulate(cfg, n);
        if (posterior->parsed()) return cmd_posterior(cfg, t, x, u_max);
        if (predict->parsed()) return cmd_predict(cfg, t, x, u_max);
        if (price->parsed() || spread->parsed()) return cmd_price_spread(cfg, t, x);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
