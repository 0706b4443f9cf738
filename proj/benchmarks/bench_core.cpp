#include <benchmark/benchmark.h>

#include "trendhedge/hedge.hpp"
#include "trendhedge/jump.hpp"
#include "trendhedge/rates.hpp"
#include "trendhedge/series.hpp"
#include "trendhedge/trend.hpp"

using namespace trendhedge;

namespace {

PriceSeries sample_series(std::size_t n, std::uint64_t seed) {
    SynthSpec spec;
    spec.n = n;
    spec.s0 = 100.0;
    spec.drift = 0.03;
    spec.vol = 0.2;
    spec.seed = seed;
    spec.jumps = {{n / 2, 0.1}};
    return generate(spec);
}

void BM_Generate(benchmark::State& state) {
    SynthSpec spec;
    spec.n = static_cast<std::size_t>(state.range(0));
    spec.s0 = 100.0;
    spec.vol = 0.2;
    spec.seed = 7;
    for (auto _ : state) {
        auto s = generate(spec);
        benchmark::DoNotOptimize(s.values.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Generate)->Arg(252)->Arg(4096);

void BM_EstimateTrend(benchmark::State& state) {
    const PriceSeries s =
        sample_series(static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state) {
        auto est = estimate_trend(s);
        benchmark::DoNotOptimize(est.trend.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateTrend)->Arg(252)->Arg(4096);

void BM_DeltaPath(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const PriceSeries s = sample_series(n, 11);
    const PriceSeries v = sample_series(n, 12);
    const RatePath r = constant_rate(0.02, n);
    const auto st = estimate_trend(s);
    const auto vt = estimate_trend(v);
    const HedgeInit init = init_hedge(vt, st, 0.02);
    for (auto _ : state) {
        auto path = delta_path(vt, st, r, init);
        benchmark::DoNotOptimize(path.delta.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DeltaPath)->Arg(252)->Arg(4096);

void BM_ForecastJumps(benchmark::State& state) {
    const PriceSeries s =
        sample_series(static_cast<std::size_t>(state.range(0)), 13);
    const auto est = estimate_trend(s);
    for (auto _ : state) {
        auto f = forecast_jumps(s, est);
        benchmark::DoNotOptimize(&f);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ForecastJumps)->Arg(252)->Arg(4096);

} // namespace

BENCHMARK_MAIN();
