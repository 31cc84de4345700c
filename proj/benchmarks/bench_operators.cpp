// Microbenchmarks for the hot operators: mutation kernels, distribution
// samplers, fitness evaluations, and one end-to-end local-search run.

#include "sdrls/algorithm.hpp"
#include "sdrls/graph.hpp"
#include "sdrls/mutation.hpp"
#include "sdrls/problem.hpp"
#include "sdrls/random.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace sdrls;

namespace {

BitString random_point(unsigned n, uint64_t seed) {
    RandomSource rng(seed);
    return BitString::random(n, rng);
}

void BM_SFlip(benchmark::State& state) {
    const unsigned n = 1000;
    const unsigned s = static_cast<unsigned>(state.range(0));
    const BitString x = random_point(n, 1);
    RandomSource rng(2);
    for (auto _ : state) benchmark::DoNotOptimize(s_flip(x, s, rng));
}
BENCHMARK(BM_SFlip)->Arg(1)->Arg(2)->Arg(4);

void BM_FlipBernoulli(benchmark::State& state) {
    const unsigned n = 1000;
    BitString x = random_point(n, 3);
    RandomSource rng(4);
    std::vector<uint32_t> flipped;
    for (auto _ : state) {
        flip_bernoulli(x, 1.0 / n, rng, flipped);
        benchmark::DoNotOptimize(flipped.size());
    }
}
BENCHMARK(BM_FlipBernoulli);

void BM_BinomialSample(benchmark::State& state) {
    const BinomialCount dist(1000, 0.001);
    RandomSource rng(5);
    for (auto _ : state) benchmark::DoNotOptimize(dist.sample(rng));
}
BENCHMARK(BM_BinomialSample);

void BM_PowerLawSample(benchmark::State& state) {
    const PowerLawAlpha dist(500, 1.5);
    RandomSource rng(6);
    for (auto _ : state) benchmark::DoNotOptimize(dist.sample(rng));
}
BENCHMARK(BM_PowerLawSample);

void BM_EvalOneMax(benchmark::State& state) {
    const OneMax p(10000);
    const BitString x = random_point(p.n(), 7);
    for (auto _ : state) benchmark::DoNotOptimize(p.evaluate(x));
}
BENCHMARK(BM_EvalOneMax);

void BM_EvalGap(benchmark::State& state) {
    const Jump p(10000, 4);
    const BitString x = random_point(p.n(), 8);
    for (auto _ : state) benchmark::DoNotOptimize(p.evaluate(x));
}
BENCHMARK(BM_EvalGap);

void BM_EvalPrefixSuffix(benchmark::State& state) {
    const NeedGlobalMut p(1024);
    const BitString x = random_point(p.n(), 9);
    for (auto _ : state) benchmark::DoNotOptimize(p.evaluate(x));
}
BENCHMARK(BM_EvalPrefixSuffix);

void BM_EvalSpanningTree(benchmark::State& state) {
    const MstProblem p(tg_graph(100)); // 1300 edges
    const BitString x = random_point(p.n(), 10);
    for (auto _ : state) benchmark::DoNotOptimize(p.evaluate(x));
}
BENCHMARK(BM_EvalSpanningTree);

void BM_Kruskal(benchmark::State& state) {
    const WeightedGraph g = tg_graph(100);
    for (auto _ : state) benchmark::DoNotOptimize(kruskal(g).weight);
}
BENCHMARK(BM_Kruskal);

void BM_FullRun(benchmark::State& state) {
    const OneMax p(200);
    AlgorithmConfig cfg;
    cfg.variant = Variant::SdRlsStar;
    uint64_t seed = 1;
    uint64_t evals = 0;
    for (auto _ : state) {
        const RunResult r = run_trial(cfg, p, 10000000, seed++);
        evals += r.evaluations;
        benchmark::DoNotOptimize(r.evaluations);
    }
    state.counters["evals"] =
        benchmark::Counter(double(evals), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_FullRun);

} // namespace

BENCHMARK_MAIN();
