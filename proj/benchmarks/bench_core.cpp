#include <benchmark/benchmark.h>

#include <memory>

#include "infobridge/bayes_filter.hpp"
#include "infobridge/cds_pricing.hpp"
#include "infobridge/info_process.hpp"

using namespace infobridge;

namespace {

const DefaultLaw& expo() {
    static const DefaultLaw law = DefaultLaw::exponential(1.0);
    return law;
}

std::shared_ptr<const PathGrid> grid200() {
    static const auto grid =
        std::make_shared<const PathGrid>(PathGrid::regular(2.0, 0.01));
    return grid;
}

void BM_SimulateBridge(benchmark::State& state) {
    RandomStream rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_bridge(1.3, grid200(), rng));
    }
}
BENCHMARK(BM_SimulateBridge);

void BM_SimulateInfo(benchmark::State& state) {
    const auto law = std::make_shared<DefaultLaw>(expo());
    RandomStream rng(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_info(law, grid200(), rng));
    }
}
BENCHMARK(BM_SimulateInfo);

void BM_PosteriorCdf(benchmark::State& state) {
    const Observation obs = Observation::at(0.5, 0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(posterior_cdf(expo(), obs, 1.0));
    }
}
BENCHMARK(BM_PosteriorCdf);

void BM_OptionalProjectionDirect(benchmark::State& state) {
    const Observation obs = Observation::at(0.5, 0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(optional_projection_oZ(expo(), obs));
    }
}
BENCHMARK(BM_OptionalProjectionDirect);

void BM_DriftTableLookup(benchmark::State& state) {
    static const DriftEvaluator filter(expo(), grid200());
    double x = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(filter.at_index(50, x));
        x = x < 1.0 ? x + 1e-4 : 0.01;
    }
}
BENCHMARK(BM_DriftTableLookup);

void BM_Decompose(benchmark::State& state) {
    const auto law = std::make_shared<DefaultLaw>(expo());
    static const DriftEvaluator filter(expo(), grid200());
    RandomStream rng(3);
    const InfoPath ip = simulate_info(law, grid200(), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(ip, filter));
    }
}
BENCHMARK(BM_Decompose);

void BM_PriceBeta(benchmark::State& state) {
    CdsContract contract;
    contract.maturity = 1.0;
    contract.kappa = 0.3;
    const Observation obs = Observation::at(0.5, 0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(price_beta(expo(), contract, obs));
    }
}
BENCHMARK(BM_PriceBeta);

}  // namespace

BENCHMARK_MAIN();
