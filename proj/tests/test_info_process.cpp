#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "infobridge/bayes_filter.hpp"
#include "infobridge/errors.hpp"
#include "infobridge/info_process.hpp"
#include "test_util.hpp"

using namespace infobridge;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

InfoPath manual_path(std::shared_ptr<const PathGrid> grid, std::vector<double> values,
                     double tau, std::shared_ptr<const DefaultLaw> law) {
    InfoPath ip;
    ip.path.grid = std::move(grid);
    ip.path.values = std::move(values);
    ip.path.pin = tau;
    ip.tau = tau;
    ip.law = std::move(law);
    return ip;
}

}  // namespace

TEST_CASE("simulate_info: degenerate mixture is the deterministic bridge") {
    const auto law = std::make_shared<DefaultLaw>(DefaultLaw::discrete_atoms({{1.0, 1.0}}));
    const auto grid = std::make_shared<const PathGrid>(PathGrid::regular(2.0, 0.05));
    RandomStream rng(3);
    for (int k = 0; k < 20; ++k) {
        const InfoPath ip = simulate_info(law, grid, rng);
        CHECK(ip.tau == 1.0);
        CHECK(ip.values()[0] == 0.0);
        for (std::size_t i = 0; i < grid->times.size(); ++i)
            if (grid->times[i] >= 1.0) CHECK(ip.values()[i] == 0.0);
    }
}

TEST_CASE("simulate_info: zero mass at t matches the prior CDF") {
    const auto law = std::make_shared<DefaultLaw>(DefaultLaw::exponential(1.0));
    const auto grid = PathGrid::make({0.0, 0.5});
    const std::size_t n = 100000;
    RandomStream master(41);
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < n; ++i) {
        RandomStream rng = master.substream(i);
        const InfoPath ip = simulate_info(law, grid, rng);
        if (ip.values()[1] == 0.0) ++zeros;
        CHECK((ip.values()[1] == 0.0) == (ip.tau <= 0.5));
    }
    const double p = static_cast<double>(zeros) / static_cast<double>(n);
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    CHECK(std::abs(p - law->cdf(0.5)) <= 3.0 * se);
}

TEST_CASE("marginal of the information process is the prescribed mixture (KS)") {
    const auto law = std::make_shared<DefaultLaw>(DefaultLaw::exponential(1.0));
    const double t = 0.5;
    const auto grid = PathGrid::make({0.0, t});
    const std::size_t n = 100000;
    RandomStream master(43);
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) {
        RandomStream rng = master.substream(i);
        xs[i] = simulate_info(law, grid, rng).values()[1];
    }
    // P(beta_t <= x) = F(t) 1{x >= 0} + int_(t,inf) Phi(x; 0, t(r-t)/r) dF(r)
    const auto mixture_cdf = [&](double x) {
        const double cont = law->integrate_dF(
            [&](double r) {
                const double v = t * (r - t) / r;
                return 0.5 * std::erfc(-x / std::sqrt(2.0 * v));
            },
            {t, kInf});
        return (x >= 0.0 ? law->cdf(t) : 0.0) + cont;
    };
    const double atom = law->cdf(t);
    const double d = testutil::ks_distance_with(
        std::move(xs), mixture_cdf,
        [&](double x) { return x == 0.0 ? mixture_cdf(x) - atom : mixture_cdf(x); });
    CHECK(d < testutil::ks_critical_1pct(n));
}

TEST_CASE("hidden drift Z") {
    CHECK(drift_Z(0.3, 1.0, 0.5) == doctest::Approx(0.6));
    CHECK(drift_Z(7.0, 1.0, 1.5) == 0.0);
    CHECK(drift_Z(0.0, 2.0, 0.5) == 0.0);
    CHECK_THROWS_AS(drift_Z(0.0, 0.0, 0.5), DomainError);
}

TEST_CASE("decompose: identity, immediate default, freeze after tau") {
    const auto law = std::make_shared<DefaultLaw>(DefaultLaw::exponential(1.0));
    const auto grid = std::make_shared<const PathGrid>(PathGrid::regular(1.0, 0.02));
    const DriftEvaluator filter(*law, grid);

    SUBCASE("all-zero path decomposes to zero innovation") {
        const auto ip = manual_path(grid, std::vector<double>(grid->times.size(), 0.0), 1e-9,
                                    law);
        const DecomposedPath dp = decompose(ip, filter);
        for (double v : dp.innovation) CHECK(v == 0.0);
    }

    SUBCASE("innovation equals beta plus the accumulated drift") {
        RandomStream rng(5);
        const InfoPath ip = simulate_info(law, grid, rng);
        const DecomposedPath dp = decompose(ip, filter);
        for (std::size_t i = 0; i < grid->times.size(); ++i)
            CHECK(dp.innovation[i] == ip.values()[i] + dp.drift_integral[i]);
    }

    SUBCASE("innovation is frozen after the default time") {
        RandomStream rng(6);
        for (int k = 0; k < 25; ++k) {
            const InfoPath ip = simulate_info(law, grid, rng);
            const DecomposedPath dp = decompose(ip, filter);
            double frozen = 0.0;
            bool seen = false;
            for (std::size_t i = 1; i < grid->times.size(); ++i) {
                if (grid->times[i] < ip.tau) continue;
                if (!seen) {
                    frozen = dp.innovation[i];
                    seen = true;
                }
                CHECK(dp.innovation[i] == doctest::Approx(frozen).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("innovation ensemble: martingale and variance at unit-test scale") {
    const auto law = std::make_shared<DefaultLaw>(DefaultLaw::exponential(1.0));
    const auto grid = std::make_shared<const PathGrid>(PathGrid::regular(1.0, 0.01));
    const DriftEvaluator filter(*law, grid);
    const std::size_t n = 20000;
    RandomStream master(47);
    std::vector<double> b1(n);
    for (std::size_t i = 0; i < n; ++i) {
        RandomStream rng = master.substream(i);
        b1[i] = decompose(simulate_info(law, grid, rng), filter).innovation.back();
    }
    CHECK(std::abs(testutil::mean(b1)) <= 3.0 * testutil::std_error_of_mean(b1));
    const double target = law->integrate_dF(
        [](double r) { return std::min(r, 1.0); }, {0.0, kInf});
    const double var = testutil::variance(b1);
    CHECK(std::abs(var - target) <= 3.0 * var * std::sqrt(2.0 / n) + 0.01);
}

TEST_CASE("integrated absolute drift stays under the 2 sqrt(t) bound") {
    const auto law = std::make_shared<DefaultLaw>(DefaultLaw::exponential(1.0));
    const auto grid = std::make_shared<const PathGrid>(PathGrid::regular(1.0, 0.005));
    const std::size_t n = 5000;
    RandomStream master(53);
    std::vector<double> integrals(n);
    for (std::size_t i = 0; i < n; ++i) {
        RandomStream rng = master.substream(i);
        const InfoPath ip = simulate_info(law, grid, rng);
        double acc = 0.0, prev = 0.0;
        for (std::size_t k = 1; k < grid->times.size(); ++k) {
            const double z = std::abs(drift_Z(ip.values()[k], ip.tau, grid->times[k]));
            acc += 0.5 * (grid->times[k] - grid->times[k - 1]) * (prev + z);
            prev = z;
        }
        integrals[i] = acc;
    }
    CHECK(testutil::mean(integrals) < 2.0);  // 2 sqrt(1)
}

TEST_CASE("quadratic variation") {
    const auto law = std::make_shared<DefaultLaw>(DefaultLaw::discrete_atoms({{1.0, 1.0}}));

    SUBCASE("constant-zero path has zero QV") {
        const auto grid = std::make_shared<const PathGrid>(PathGrid::regular(1.0, 0.1));
        const auto ip =
            manual_path(grid, std::vector<double>(grid->times.size(), 0.0), 0.5, law);
        for (double v : quadratic_variation(ip)) CHECK(v == 0.0);
    }

    SUBCASE("ensemble mean approximates t ^ tau") {
        const auto grid = std::make_shared<const PathGrid>(PathGrid::regular(2.0, 1e-3));
        const std::size_t n = 400;
        std::size_t i05 = 0, i20 = grid->times.size() - 1;
        for (std::size_t k = 0; k < grid->times.size(); ++k)
            if (std::abs(grid->times[k] - 0.5) < 1e-9) i05 = k;
        std::vector<double> q05(n), q20(n);
        RandomStream master(59);
        for (std::size_t i = 0; i < n; ++i) {
            RandomStream rng = master.substream(i);
            const auto qv = quadratic_variation(simulate_info(law, grid, rng));
            q05[i] = qv[i05];
            q20[i] = qv[i20];
        }
        CHECK(testutil::mean(q05) == doctest::Approx(0.5).epsilon(0.02));
        CHECK(testutil::mean(q20) == doctest::Approx(1.0).epsilon(0.02));
    }
}

TEST_CASE("default indicator diagnostic") {
    const auto law = std::make_shared<DefaultLaw>(DefaultLaw::exponential(1.0));
    const auto grid = std::make_shared<const PathGrid>(PathGrid::regular(2.0, 0.5));

    const auto ip = manual_path(grid, {0.0, 0.4, 0.0, 0.0, 0.0}, 1.0, law);
    CHECK(default_indicator_diagnostic(ip, 2.0) == ZeroDiagnostic::consistent);
    CHECK(default_indicator_diagnostic(ip, 0.5) == ZeroDiagnostic::consistent);

    const auto spurious = manual_path(grid, {0.0, 0.0, 0.3, 0.0, 0.0}, 1.5, law);
    CHECK(default_indicator_diagnostic(spurious, 0.5) == ZeroDiagnostic::spurious_zero);

    const auto missed = manual_path(grid, {0.0, 0.4, 0.2, 0.0, 0.0}, 1.0, law);
    CHECK(default_indicator_diagnostic(missed, 1.0) == ZeroDiagnostic::missed_default);

    CHECK_THROWS_AS(default_indicator_diagnostic(ip, 0.7), DomainError);
}

TEST_CASE("spurious-zero rate decreases with the tolerance") {
    const auto law = std::make_shared<DefaultLaw>(DefaultLaw::exponential(1.0));
    const auto grid = PathGrid::make({0.0, 0.5});
    const std::size_t n = 50000;
    RandomStream master(61);
    std::size_t wide = 0, narrow = 0;
    for (std::size_t i = 0; i < n; ++i) {
        RandomStream rng = master.substream(i);
        const InfoPath ip = simulate_info(law, grid, rng);
        if (default_indicator_diagnostic(ip, 0.5, 5e-2) == ZeroDiagnostic::spurious_zero)
            ++wide;
        if (default_indicator_diagnostic(ip, 0.5, 1e-6) == ZeroDiagnostic::spurious_zero)
            ++narrow;
    }
    CHECK(wide > 0);       // a loose tolerance mislabels alive paths near zero
    CHECK(narrow <= wide);
}

TEST_CASE("predictive law depends on more than the time difference") {
    const auto expo = DefaultLaw::exponential(1.0);
    double d = 0.0;
    for (double y : {-0.2, 0.0, 0.2}) {
        d = std::max(d, std::abs(predict_cdf_beta(expo, Observation::at(0.2, 0.2), 0.4, y) -
                                 predict_cdf_beta(expo, Observation::at(0.6, 0.2), 0.8, y)));
    }
    CHECK(d > 1e-9);
}
