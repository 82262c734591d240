#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "infobridge/errors.hpp"
#include "infobridge/mc_oracle.hpp"

using namespace infobridge;

namespace {

McConfig config(std::size_t n, std::uint64_t seed) {
    McConfig cfg;
    cfg.n_paths = n;
    cfg.master_seed = seed;
    cfg.bin_width = 0.01;
    return cfg;
}

}  // namespace

TEST_CASE("binned posterior: trivial horizons") {
    const auto expo = DefaultLaw::exponential(1.0);
    const auto early = binned_posterior(expo, config(200000, 1), 0.5, 0.4, 0.5);
    CHECK(early.estimate == 0.0);
    CHECK(early.pass);

    const auto late = binned_posterior(expo, config(200000, 1), 0.5, 0.4, 60.0);
    CHECK(late.estimate == doctest::Approx(1.0));
    CHECK(late.pass);
}

TEST_CASE("binned posterior agrees with the closed form at scale") {
    const auto expo = DefaultLaw::exponential(1.0);
    const auto rep = binned_posterior(expo, config(200000, 1), 0.5, 0.2, 1.0);
    CHECK(rep.n_effective >= 100);
    CHECK(std::abs(rep.estimate - rep.target) <= rep.tolerance);
    CHECK(rep.pass);
}

TEST_CASE("binned posterior failure modes") {
    const auto expo = DefaultLaw::exponential(1.0);
    CHECK_THROWS_AS(binned_posterior(expo, config(2000, 3), 0.5, 50.0, 1.0), EmptyBin);

    const auto thin = binned_posterior(expo, config(3000, 3), 0.5, 0.2, 1.0);
    CHECK(thin.n_effective < 100);
    CHECK_FALSE(thin.pass);
    CHECK(thin.note.find("insufficient") != std::string::npos);
}

TEST_CASE("binned posterior is deterministic in the master seed") {
    const auto expo = DefaultLaw::exponential(1.0);
    const auto a = binned_posterior(expo, config(50000, 99), 0.5, 0.2, 1.0);
    const auto b = binned_posterior(expo, config(50000, 99), 0.5, 0.2, 1.0);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);
    CHECK(a.n_effective == b.n_effective);
    const auto c = binned_posterior(expo, config(50000, 100), 0.5, 0.2, 1.0);
    CHECK(a.estimate != c.estimate);
}

TEST_CASE("standard errors shrink like n^{-1/2}") {
    const auto expo = DefaultLaw::exponential(1.0);
    const auto small = binned_posterior(expo, config(100000, 11), 0.5, 0.2, 1.0);
    const auto large = binned_posterior(expo, config(400000, 11), 0.5, 0.2, 1.0);
    const double ratio = large.std_error / small.std_error;
    CHECK(ratio == doctest::Approx(0.5).epsilon(0.20));
}

TEST_CASE("acceptance report is bit-identical for a fixed seed and config") {
    const auto cfg = parse_config_text(R"(
law { kind = "exponential", rate = 1.0 }
mc { n_paths = 2000, bin_width = 0.01 }
seed = 5
)");
    const std::string a = "suite_report_a.csv";
    const std::string b = "suite_report_b.csv";
    std::ostringstream log_a, log_b;
    run_acceptance_suite(cfg, a, log_a);
    run_acceptance_suite(cfg, b, log_b);
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());
    CHECK(log_a.str() == log_b.str());
}

TEST_CASE("ensemble statistics of decomposed paths") {
    const auto law = std::make_shared<DefaultLaw>(DefaultLaw::exponential(1.0));
    const auto grid = std::make_shared<const PathGrid>(PathGrid::regular(1.0, 0.01));
    const DriftEvaluator filter(*law, grid);
    std::vector<DecomposedPath> paths;
    RandomStream master(5);
    for (std::size_t i = 0; i < 5000; ++i) {
        RandomStream rng = master.substream(i);
        paths.push_back(decompose(simulate_info(law, grid, rng), filter));
    }

    const auto reports = ensemble_stats(paths, 1.0);
    REQUIRE(reports.size() == 4);
    for (const auto& rep : reports) {
        INFO(rep.name, ": estimate ", rep.estimate, " target ", rep.target, " tol ",
             rep.tolerance);
        CHECK(rep.pass);
    }

    SUBCASE("time zero is exactly degenerate") {
        const auto zero = ensemble_stats(paths, 0.0);
        for (const auto& rep : zero) {
            CHECK(rep.estimate == 0.0);
            CHECK(rep.pass);
        }
    }

    SUBCASE("off-grid time is rejected") {
        CHECK_THROWS_AS(ensemble_stats(paths, 0.1234), DomainError);
    }
}

TEST_CASE("ensemble statistics of an all-zero ensemble vanish") {
    // immediate default freezes every path (and its decomposition) at zero
    const double eps = 1e-12;
    const auto law = std::make_shared<DefaultLaw>(DefaultLaw::discrete_atoms({{eps, 1.0}}));
    const auto grid = std::make_shared<const PathGrid>(PathGrid::regular(1.0, 0.25));
    std::vector<DecomposedPath> paths(50);
    for (auto& dp : paths) {
        dp.beta.path.grid = grid;
        dp.beta.path.values.assign(grid->times.size(), 0.0);
        dp.beta.path.pin = eps;
        dp.beta.tau = eps;
        dp.beta.law = law;
        dp.drift_integral.assign(grid->times.size(), 0.0);
        dp.innovation.assign(grid->times.size(), 0.0);
    }
    for (const auto& rep : ensemble_stats(paths, 1.0)) {
        CHECK(rep.estimate == 0.0);
        CHECK(rep.std_error == 0.0);
        CHECK(std::abs(rep.target) <= eps);  // E[t ^ tau] = eps ~ 0
    }
}
