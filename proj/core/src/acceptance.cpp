#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#include "infobridge/bayes_filter.hpp"
#include "infobridge/cds_pricing.hpp"
#include "infobridge/csv.hpp"
#include "infobridge/detail/pchip.hpp"
#include "infobridge/errors.hpp"
#include "infobridge/mc_oracle.hpp"
#include "infobridge/parallel.hpp"
#include "stat_reports.hpp"

namespace infobridge {

namespace {

using detail::mean_of;
using detail::sd_of;

const double kInf = std::numeric_limits<double>::infinity();
const double kTwoPi = 2.0 * std::acos(-1.0);

struct SuiteContext {
    std::size_t n = 100000;      // base ensemble size
    std::uint64_t seed = 0;
    double bin_width = 0.01;
};

RandomStream criterion_stream(const SuiteContext& ctx, std::uint64_t criterion) {
    return RandomStream(ctx.seed).substream(criterion);
}

void add_3se(std::vector<McReport>& out, std::string name, double est, double se,
             std::size_t n, double target, std::string note = {}) {
    out.push_back(detail::report_3se(std::move(name), est, se, n, target, std::move(note)));
}

void add_abs(std::vector<McReport>& out, std::string name, double est, double target,
             double tol, std::size_t n = 0, std::string note = {}) {
    out.push_back(detail::report_abs(std::move(name), est, target, tol, n, std::move(note)));
}

void add_mean_report(std::vector<McReport>& out, std::string name,
                     const std::vector<double>& xs, double target) {
    out.push_back(detail::report_mean(std::move(name), xs, target));
}

void add_var_report(std::vector<McReport>& out, std::string name,
                    const std::vector<double>& xs, double target) {
    out.push_back(detail::report_var(std::move(name), xs, target));
}

void add_cov_report(std::vector<McReport>& out, std::string name,
                    const std::vector<double>& xs, const std::vector<double>& ys) {
    out.push_back(detail::report_cov_zero(std::move(name), xs, ys));
}

// exact (tau, beta_t) marginal, as in mc_oracle
void draw_pair(const DefaultLaw& law, double t, RandomStream rng, double& tau, double& x) {
    tau = law.sample(rng);
    if (tau > t) {
        const GaussianKernel k = transition_kernel(tau, 0.0, t, 0.0);
        x = k.mean + std::sqrt(k.variance) * rng.normal();
    } else {
        x = 0.0;
    }
}

std::size_t index_near(const PathGrid& grid, double t) {
    const auto it = std::lower_bound(grid.times.begin(), grid.times.end(), t - 1e-9);
    if (it == grid.times.end()) throw DomainError("time beyond grid");
    return static_cast<std::size_t>(it - grid.times.begin());
}

// ---------------------------------------------------------------------------
// criterion 1: sample covariance of the deterministic-length bridge
void criterion_1(const SuiteContext& ctx, std::vector<McReport>& out) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = 2 * ctx.n;
    const double r = 1.0;
    std::vector<double> grid_times{0.0};
    for (int k = 1; k <= 9; ++k) grid_times.push_back(0.1 * k);
    const auto grid = PathGrid::make(grid_times);
    const std::size_t m = 9;

    std::vector<double> vals(n * m);
    const RandomStream base = criterion_stream(ctx, 1);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            RandomStream rng = base.substream(i);
            const Path p = simulate_bridge(r, grid, rng);
            for (std::size_t k = 0; k < m; ++k) vals[i * m + k] = p.values[k + 1];
        }
    });

    std::vector<double> means(m, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) means[k] += vals[i * m + k];
    for (auto& v : means) v /= static_cast<double>(n);

    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a; b < m; ++b) {
            double sum = 0.0, sum2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double z = (vals[i * m + a] - means[a]) * (vals[i * m + b] - means[b]);
                sum += z;
                sum2 += z * z;
            }
            const double nn = static_cast<double>(n);
            const double est = sum / (nn - 1.0);
            const double var_z = std::max(0.0, sum2 / nn - (sum / nn) * (sum / nn));
            const double se = std::sqrt(var_z / nn);
            const double s = grid->times[a + 1];
            const double t = grid->times[b + 1];
            add_3se(out, "c1.cov(" + format_double(s) + ";" + format_double(t) + ")", est, se,
                    n, bridge_covariance(r, s, t));
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // report the budget check as an indicator so the file stays bit-identical
    // across runs; the measured seconds themselves are wall-clock noise
    add_abs(out, "c1.runtime_under_60s", seconds < 60.0 ? 1.0 : 0.0, 1.0, 0.0, n);
}

// ---------------------------------------------------------------------------
// criterion 2: P(beta_t = 0) = F(t) path-wise against the carried tau
void criterion_2(const SuiteContext& ctx, std::vector<McReport>& out) {
    const auto law = std::make_shared<DefaultLaw>(DefaultLaw::exponential(1.0));
    const auto grid = PathGrid::make({0.0, 0.25, 0.5, 1.0});
    const std::size_t n = ctx.n;
    std::vector<std::uint8_t> zero_flags(n * 3);
    std::vector<std::uint8_t> mismatch(n, 0);
    const RandomStream base = criterion_stream(ctx, 2);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            RandomStream rng = base.substream(i);
            const InfoPath ip = simulate_info(law, grid, rng);
            for (std::size_t k = 0; k < 3; ++k) {
                const bool is_zero = ip.values()[k + 1] == 0.0;
                const bool defaulted = ip.tau <= grid->times[k + 1];
                zero_flags[i * 3 + k] = is_zero ? 1 : 0;
                if (is_zero != defaulted) mismatch[i] = 1;
            }
        }
    });
    std::size_t bad = 0;
    for (auto f : mismatch) bad += f;
    for (std::size_t k = 0; k < 3; ++k) {
        const double t = grid->times[k + 1];
        std::size_t hits = 0;
        for (std::size_t i = 0; i < n; ++i) hits += zero_flags[i * 3 + k];
        const double p = static_cast<double>(hits) / static_cast<double>(n);
        const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
        add_3se(out, "c2.zero_mass(t=" + format_double(t) + ")", p, se, n, law->cdf(t),
                bad ? std::to_string(bad) + " zero/tau mismatches" : "");
    }
}

// ---------------------------------------------------------------------------
// criterion 3: binned empirical Bayes vs the closed-form posterior CDF
void criterion_3(const SuiteContext& ctx, std::vector<McReport>& out) {
    struct LawCase {
        std::string name;
        DefaultLaw law;
        std::vector<double> u_grid;
    };
    const std::vector<LawCase> cases = {
        {"exp", DefaultLaw::exponential(1.0), {0.6, 0.75, 1.0, 1.25, 1.5, 2.0, 3.0, 5.0}},
        {"two_atom", DefaultLaw::discrete_atoms({{1.0, 0.5}, {2.0, 0.5}}),
         {0.75, 1.0, 1.25, 1.5, 2.0, 2.5}},
    };
    const double t = 0.5;
    const std::size_t n = 10 * ctx.n;
    const double half = 0.5 * ctx.bin_width;

    for (std::size_t c = 0; c < cases.size(); ++c) {
        const auto& lc = cases[c];
        std::vector<double> taus(n), xs(n);
        const RandomStream base = criterion_stream(ctx, 30 + c);
        parallel_for(n, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i)
                draw_pair(lc.law, t, base.substream(i), taus[i], xs[i]);
        });
        for (double x_center : {0.1, 0.2, 0.5}) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < n; ++i)
                if (std::abs(xs[i] - x_center) <= half) members.push_back(i);
            const std::string name =
                "c3.bayes_sup(" + lc.name + ";x=" + format_double(x_center) + ")";
            if (members.size() < 100) {
                add_abs(out, name, std::numeric_limits<double>::quiet_NaN(), 0.0, 0.02,
                        members.size(),
                        "insufficient bin (" + std::to_string(members.size()) + " paths)");
                out.back().pass = false;
                continue;
            }
            const PosteriorCurve curve(lc.law, Observation::at(t, x_center));
            double sup = 0.0;
            for (double u : lc.u_grid) {
                std::size_t hits = 0;
                for (std::size_t i : members)
                    if (taus[i] <= u) ++hits;
                const double emp =
                    static_cast<double>(hits) / static_cast<double>(members.size());
                sup = std::max(sup, std::abs(emp - curve.cdf_at(u)));
            }
            add_abs(out, name, sup, 0.0, 0.02, members.size());
        }
    }

    // the public binned estimator itself, once at full scale
    McConfig cfg;
    cfg.n_paths = ctx.n;
    cfg.master_seed = criterion_stream(ctx, 35).seed();
    cfg.bin_width = ctx.bin_width;
    try {
        McReport rep = binned_posterior(DefaultLaw::exponential(1.0), cfg, t, 0.2, 1.0);
        rep.name = "c3.binned_posterior_op(exp;x=0.2;u=1)";
        out.push_back(std::move(rep));
    } catch (const EmptyBin& e) {
        add_abs(out, "c3.binned_posterior_op(exp;x=0.2;u=1)",
                std::numeric_limits<double>::quiet_NaN(), 0.0, 0.02, 0, e.what());
        out.back().pass = false;
    }
}

// ---------------------------------------------------------------------------
// criterion 4: two-atom posterior mass against the hand-normalized ratio
void criterion_4(const SuiteContext&, std::vector<McReport>& out) {
    const auto law = DefaultLaw::discrete_atoms({{1.0, 0.5}, {2.0, 0.5}});
    const double t = 0.5, x = 0.3;
    // direct plug-in of the two Gaussian densities
    const auto plain_density = [&](double r) {
        const double v = t * (r - t) / r;
        return std::exp(-x * x / (2.0 * v)) / std::sqrt(kTwoPi * v);
    };
    const double d1 = plain_density(1.0);
    const double d2 = plain_density(2.0);
    const double hand = d1 / (d1 + d2);
    const double mass = posterior_cdf(law, Observation::at(t, x), 1.0);
    add_abs(out, "c4.two_atom_ratio", mass, hand, 1e-10, 0);
}

// ---------------------------------------------------------------------------
// criterion 5: innovation process is a stopped Brownian motion
void criterion_5(const SuiteContext& ctx, std::vector<McReport>& out) {
    const auto law = std::make_shared<DefaultLaw>(DefaultLaw::exponential(1.0));
    // dt = 0.0025 keeps the trapezoid bias of var(b) well inside the 3-s.e.
    // band (measured ~0.001 at this step against ~0.004 at twice the step)
    const auto grid = std::make_shared<const PathGrid>(PathGrid::regular(2.0, 0.0025));
    const DriftEvaluator filter(*law, grid);
    const std::size_t n = ctx.n;
    const std::size_t i05 = index_near(*grid, 0.5);
    const std::size_t i10 = index_near(*grid, 1.0);
    const std::size_t i20 = index_near(*grid, 2.0);

    std::vector<double> b05(n), b10(n), b20(n);
    const RandomStream base = criterion_stream(ctx, 5);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            RandomStream rng = base.substream(i);
            const InfoPath ip = simulate_info(law, grid, rng);
            const DecomposedPath dp = decompose(ip, filter);
            b05[i] = dp.innovation[i05];
            b10[i] = dp.innovation[i10];
            b20[i] = dp.innovation[i20];
        }
    });

    const auto e_min = [&](double t) {
        return law->integrate_dF([&](double r) { return std::min(r, t); }, {0.0, kInf});
    };
    add_mean_report(out, "c5.mean_b(t=0.5)", b05, 0.0);
    add_mean_report(out, "c5.mean_b(t=1)", b10, 0.0);
    add_mean_report(out, "c5.mean_b(t=2)", b20, 0.0);
    add_var_report(out, "c5.var_b(t=0.5)", b05, e_min(0.5));
    add_var_report(out, "c5.var_b(t=1)", b10, e_min(1.0));
    add_var_report(out, "c5.var_b(t=2)", b20, e_min(2.0));

    std::vector<double> inc1(n), inc2(n);
    for (std::size_t i = 0; i < n; ++i) {
        inc1[i] = b10[i] - b05[i];
        inc2[i] = b20[i] - b10[i];
    }
    add_cov_report(out, "c5.cov_inc(0,0.5;0.5,1)", b05, inc1);
    add_cov_report(out, "c5.cov_inc(0.5,1;1,2)", inc1, inc2);
    add_cov_report(out, "c5.cov_inc(0,0.5;1,2)", b05, inc2);
}

// ---------------------------------------------------------------------------
// criterion 6: quadratic variation approximates t ^ tau
void criterion_6(const SuiteContext& ctx, std::vector<McReport>& out) {
    const auto law = std::make_shared<DefaultLaw>(DefaultLaw::discrete_atoms({{1.0, 1.0}}));
    const auto grid = std::make_shared<const PathGrid>(PathGrid::regular(2.0, 1e-4));
    const std::size_t n = std::clamp<std::size_t>(ctx.n / 50, 64, 2000);
    const std::size_t i05 = index_near(*grid, 0.5);
    const std::size_t i20 = index_near(*grid, 2.0);

    std::vector<double> qv05(n), qv20(n);
    const RandomStream base = criterion_stream(ctx, 6);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            RandomStream rng = base.substream(i);
            const InfoPath ip = simulate_info(law, grid, rng);
            double acc = 0.0;
            for (std::size_t k = 1; k <= i20; ++k) {
                const double inc = ip.values()[k] - ip.values()[k - 1];
                acc += inc * inc;
                if (k == i05) qv05[i] = acc;
            }
            qv20[i] = acc;
        }
    });
    const double m05 = mean_of(qv05);
    const double m20 = mean_of(qv20);
    add_abs(out, "c6.mean_qv(t=0.5)", m05, 0.5, 0.01, n);
    out.back().std_error = sd_of(qv05, m05) / std::sqrt(static_cast<double>(n));
    add_abs(out, "c6.mean_qv(t=2)", m20, 1.0, 0.01, n);
    out.back().std_error = sd_of(qv20, m20) / std::sqrt(static_cast<double>(n));
}

// ---------------------------------------------------------------------------
// criterion 7: pricing consistency
void criterion_7(const SuiteContext& ctx, std::vector<McReport>& out) {
    const auto law = DefaultLaw::exponential(1.0);
    CdsContract contract;
    contract.maturity = 1.0;
    contract.kappa = 0.3;
    contract.recovery = Recovery::constant(1.0);

    const Observation at0 = Observation::at(0.0, 0.0);
    const Quote h0 = price_H(law, contract, 0.0, true);
    const Quote b0 = price_beta(law, contract, at0);
    add_abs(out, "c7.t0_consistency", b0.price, h0.price, 1e-8, 0);

    const double spread_h = fair_spread(law, contract, at0, Filtration::H);
    add_abs(out, "c7.fair_spread_H(t=0)", spread_h, 1.0, 1e-10, 0);

    CdsContract at_spread = contract;
    at_spread.kappa = spread_h;
    add_abs(out, "c7.reprice_H", price_H(law, at_spread, 0.0, true).price, 0.0, 1e-10, 0);

    const Observation mid = Observation::at(0.5, 0.3);
    CdsContract beta_contract = contract;
    beta_contract.kappa = fair_spread(law, contract, mid, Filtration::F_beta);
    add_abs(out, "c7.reprice_beta", price_beta(law, beta_contract, mid).price, 0.0, 1e-10, 0);

    // conditional cash flows against price_beta in a beta_t-bin
    const double t = 0.5;
    const double x_center = 0.2;
    const double half = 0.5 * ctx.bin_width;
    const std::size_t n = ctx.n;
    std::vector<double> taus(n), xs(n);
    const RandomStream base = criterion_stream(ctx, 7);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            draw_pair(law, t, base.substream(i), taus[i], xs[i]);
    });
    std::vector<double> flows;
    for (std::size_t i = 0; i < n; ++i) {
        if (taus[i] <= t || std::abs(xs[i] - x_center) > half) continue;
        const double tau = taus[i];
        const double protection = (tau <= contract.maturity) ? contract.recovery(tau) : 0.0;
        const double fee = contract.kappa * (std::min(tau, contract.maturity) - t);
        flows.push_back(protection - fee);
    }
    const double target = price_beta(law, contract, Observation::at(t, x_center)).price;
    if (flows.size() < 100) {
        add_abs(out, "c7.mc_cashflow", std::numeric_limits<double>::quiet_NaN(), target, 0.0,
                flows.size(), "insufficient bin (" + std::to_string(flows.size()) + " paths)");
        out.back().pass = false;
    } else {
        add_mean_report(out, "c7.mc_cashflow", flows, target);
    }
}

// ---------------------------------------------------------------------------
// criterion 8: E[P(tau <= u | F_t)] = F(u)
void criterion_8(const SuiteContext& ctx, std::vector<McReport>& out) {
    const auto law = DefaultLaw::exponential(1.0);
    const std::size_t n = ctx.n;
    const struct {
        double t, u;
    } pairs[] = {{0.5, 1.0}, {1.0, 2.0}};

    for (std::size_t c = 0; c < 2; ++c) {
        const double t = pairs[c].t;
        const double u = pairs[c].u;

        // tabulate the even function x -> posterior_cdf on a graded abscissa
        const int nodes = 200;
        const double x_max = 8.5 * std::sqrt(t) + 0.25;
        std::vector<double> txs(nodes + 1), tys(nodes + 1);
        for (int j = 0; j <= nodes; ++j) {
            const double frac = static_cast<double>(j) / nodes;
            txs[j] = x_max * frac * frac;
        }
        txs[0] = txs[1] * 0.25;
        for (int j = 0; j <= nodes; ++j)
            tys[j] = posterior_cdf(law, Observation{t, txs[j], false}, u);
        const detail::PchipTable table(std::move(txs), std::move(tys));

        std::vector<double> vals(n);
        const RandomStream base = criterion_stream(ctx, 80 + c);
        parallel_for(n, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                double tau, x;
                draw_pair(law, t, base.substream(i), tau, x);
                if (tau <= t)
                    vals[i] = tau <= u ? 1.0 : 0.0;  // defaulted branch knows tau
                else
                    vals[i] = table(std::abs(x));
            }
        });
        add_mean_report(out,
                        "c8.martingale(t=" + format_double(t) + ";u=" + format_double(u) + ")",
                        vals, law.cdf(u));
    }
}

// ---------------------------------------------------------------------------
// criterion 9: posterior density tends to 1 as t decreases (support > 0.5)
void criterion_9(const SuiteContext& ctx, std::vector<McReport>& out) {
    const auto law = std::make_shared<DefaultLaw>(DefaultLaw::uniform_interval(0.5, 1.5));
    const std::vector<double> probe_times{0.001, 0.01, 0.05, 0.1};
    const auto grid = PathGrid::make({0.0, 0.001, 0.01, 0.05, 0.1});
    const std::size_t n = std::min<std::size_t>(ctx.n, 5000);

    std::vector<std::vector<double>> phis(probe_times.size(), std::vector<double>(n, 0.0));
    const RandomStream base = criterion_stream(ctx, 9);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            RandomStream rng = base.substream(i);
            const InfoPath ip = simulate_info(law, grid, rng);
            for (std::size_t k = 0; k < probe_times.size(); ++k) {
                const double x = ip.values()[k + 1];
                // aggregate Observation skips the zero-routing: x = 0 has
                // probability zero but would otherwise abort the ensemble
                const PosteriorCurve curve(*law, Observation{probe_times[k], x, false});
                phis[k][i] = curve.density_weight(1.0);
            }
        }
    });
    std::vector<double> devs;
    for (std::size_t k = 0; k < probe_times.size(); ++k)
        devs.push_back(std::abs(mean_of(phis[k]) - 1.0));

    add_abs(out, "c9.phi_limit(t=0.001)", mean_of(phis[0]), 1.0, 0.05, n);
    double worst_increase = -kInf;
    for (std::size_t k = 0; k + 1 < devs.size(); ++k)
        worst_increase = std::max(worst_increase, devs[k] - devs[k + 1]);
    // deviations must shrink as t decreases (small slack for MC noise)
    McReport rep;
    rep.name = "c9.monotone_approach";
    rep.estimate = worst_increase;
    rep.n_effective = n;
    rep.target = 0.0;
    rep.tolerance = 0.005;
    rep.pass = worst_increase <= 0.005;
    out.push_back(std::move(rep));
}

// ---------------------------------------------------------------------------
// criterion 10: the predictive law is not time-homogeneous
void criterion_10(const SuiteContext&, std::vector<McReport>& out) {
    const auto law = DefaultLaw::exponential(1.0);
    const double x = 0.2;
    double max_diff = 0.0;
    for (double y : {-0.4, -0.2, 0.0, 0.1, 0.2, 0.4}) {
        const double early = predict_cdf_beta(law, Observation::at(0.2, x), 0.4, y);
        const double late = predict_cdf_beta(law, Observation::at(0.6, x), 0.8, y);
        max_diff = std::max(max_diff, std::abs(early - late));
    }
    McReport rep;
    rep.name = "c10.nonhomogeneous";
    rep.estimate = max_diff;
    rep.target = 1e-9;  // must exceed 10x the quadrature tolerance
    rep.tolerance = 1e-9;
    rep.pass = max_diff > 1e-9;
    rep.note = "pass requires estimate > target";
    out.push_back(std::move(rep));
}

using CriterionFn = void (*)(const SuiteContext&, std::vector<McReport>&);

struct CriterionEntry {
    int number;
    const char* label;
    CriterionFn fn;
};

const CriterionEntry kCriteria[] = {
    {1, "bridge covariance", criterion_1},
    {2, "default mass identity", criterion_2},
    {3, "Bayes oracle", criterion_3},
    {4, "two-atom closed ratio", criterion_4},
    {5, "innovation process", criterion_5},
    {6, "quadratic variation", criterion_6},
    {7, "pricing consistency", criterion_7},
    {8, "posterior martingale", criterion_8},
    {9, "small-time posterior limit", criterion_9},
    {10, "non-homogeneity", criterion_10},
};

}  // namespace

SuiteResult run_acceptance_suite(const RunConfig& config, const std::string& report_csv_path,
                                 std::ostream& log) {
    SuiteContext ctx;
    ctx.n = config.mc_n_paths;
    ctx.seed = config.seed;
    ctx.bin_width = config.mc_bin_width;

    SuiteResult result;
    for (const auto& entry : kCriteria) {
        std::vector<McReport> reports;
        try {
            entry.fn(ctx, reports);
        } catch (const Error& e) {
            McReport rep;
            rep.name = "c" + std::to_string(entry.number) + ".aborted";
            rep.estimate = std::numeric_limits<double>::quiet_NaN();
            rep.pass = false;
            rep.note = e.what();
            reports.push_back(std::move(rep));
        }
        bool ok = true;
        for (const auto& rep : reports) ok = ok && rep.pass;
        log << (ok ? "[PASS]" : "[FAIL]") << " criterion " << entry.number << " ("
            << entry.label << "): " << reports.size() << (reports.size() == 1 ? " check" : " checks")
            << '\n';
        for (auto& rep : reports) result.reports.push_back(std::move(rep));
        result.all_pass = result.all_pass && ok;
    }

    std::ofstream csv(report_csv_path);
    if (!csv) throw Error("cannot write report file '" + report_csv_path + "'");
    if (result.reports.size() > 20)
        csv << "# note: " << result.reports.size()
            << " checks at the 3-s.e. rule; expect ~0.3% false alarms per check "
               "(no Bonferroni correction applied)\n";
    CsvWriter writer(csv, {"check", "estimate", "std_error", "target", "tolerance", "pass"});
    for (const auto& rep : result.reports) {
        const std::string label =
            rep.note.empty() ? rep.name : rep.name + " [" + rep.note + "]";
        writer.row({label, format_double(rep.estimate), format_double(rep.std_error),
                    format_double(rep.target), format_double(rep.tolerance),
                    rep.pass ? "1" : "0"});
    }
    return result;
}

SuiteResult run_acceptance_suite(const std::string& config_path,
                                 const std::string& report_csv_path, std::ostream& log) {
    return run_acceptance_suite(parse_config_file(config_path), report_csv_path, log);
}

}  // namespace infobridge
