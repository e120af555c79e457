#include <benchmark/benchmark.h>

#include "jcpurity/measures.hpp"
#include "jcpurity/scan.hpp"

using namespace jcpurity;

static void BM_PoissonWeights(benchmark::State& state) {
    const double alpha = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(poisson_weights(alpha));
    }
}
BENCHMARK(BM_PoissonWeights)->Arg(1)->Arg(7)->Arg(30);

static void BM_BlochPoint(benchmark::State& state) {
    ModelParams p;
    p.model = state.range(0) ? Model::AJC : Model::JC;
    p.alpha = 7.0;
    const FockBasis basis = poisson_weights(p.alpha);
    double tau = 0.0;
    for (auto _ : state) {
        tau += 0.01;
        benchmark::DoNotOptimize(bloch_at(p, tau, basis));
    }
}
BENCHMARK(BM_BlochPoint)->Arg(0)->Arg(1);

static void BM_PurityReport(benchmark::State& state) {
    const BlochFourVector v{1.0, 0.3, -0.2, 0.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(purity_report(v));
    }
}
BENCHMARK(BM_PurityReport);

static void BM_RunScan(benchmark::State& state) {
    ModelParams p;
    p.alpha = 7.0;
    const TimeGrid grid{50.0, static_cast<int>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_scan(p, grid));
    }
}
BENCHMARK(BM_RunScan)->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
