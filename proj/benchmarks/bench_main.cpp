#include <benchmark/benchmark.h>

#include <random>

#include "bent3/analysis.hpp"
#include "bent3/families.hpp"
#include "bent3/mm_derivative.hpp"
#include "bent3/spectrum.hpp"

using namespace bent3;

namespace {

TernaryFn random_fn(const FieldRef& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> t(f->size());
    for (auto& v : t) v = static_cast<std::uint8_t>(rng() % 3);
    return TernaryFn(f, std::move(t));
}

void BM_FieldMul(benchmark::State& state) {
    auto f = FieldCtx::create(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(1);
    std::vector<FieldElem> xs(1024);
    for (auto& x : xs) x = FieldElem{static_cast<std::uint32_t>(rng() % f->size())};
    FieldElem acc = FieldCtx::one();
    for (auto _ : state) {
        for (FieldElem x : xs) acc = f->mul(acc, f->add(x, FieldCtx::one()));
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(12);

void BM_SpectrumFast(benchmark::State& state) {
    auto f = FieldCtx::create(static_cast<int>(state.range(0)));
    const auto g = random_fn(f, 2);
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_fast(g));
    state.SetItemsProcessed(state.iterations() * f->size());
}
BENCHMARK(BM_SpectrumFast)->Arg(4)->Arg(6)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SpectrumNaive(benchmark::State& state) {
    auto f = FieldCtx::create(static_cast<int>(state.range(0)));
    const auto g = random_fn(f, 3);
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_naive(g));
}
BENCHMARK(BM_SpectrumNaive)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_AlgebraicDegree(benchmark::State& state) {
    auto f = FieldCtx::create(static_cast<int>(state.range(0)));
    const auto g = random_fn(f, 4);
    for (auto _ : state) benchmark::DoNotOptimize(algebraic_degree(g));
}
BENCHMARK(BM_AlgebraicDegree)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SecondDerivativeTest(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    auto f = FieldCtx::create(4 * k);
    const FieldElem a1 = f->generator();
    const auto g = make_binomial_general(f, k, a1, 1);
    const auto v = build_V_binomial(*f, k, a1, 1, 16).v;
    for (auto _ : state) benchmark::DoNotOptimize(d2_vanishes_on(g, v));
}
BENCHMARK(BM_SecondDerivativeTest)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_TheoremTwo(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    auto f = FieldCtx::create(4 * k);
    const FieldElem a1 = f->generator();
    const auto g = make_binomial_general(f, k, a1, 1);
    const auto v = build_V_binomial(*f, k, a1, 1, 16).v;
    for (auto _ : state) benchmark::DoNotOptimize(check_thm2(g, v).passed);
}
BENCHMARK(BM_TheoremTwo)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_CheckBent(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    auto f = FieldCtx::create(4 * k);
    const auto g = make_binomial_general(f, k, f->generator(), 1);
    for (auto _ : state) benchmark::DoNotOptimize(check_bent(g).is_bent);
}
BENCHMARK(BM_CheckBent)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
