#include "quasinv/demazure.hpp"
#include "quasinv/elliptic.hpp"
#include "quasinv/fake_k.hpp"
#include "quasinv/ganea.hpp"
#include "quasinv/groups.hpp"
#include "quasinv/quasi_invariants.hpp"

#include <benchmark/benchmark.h>

using namespace quasinv;

// Quasi-invariant basis of I2(k) with constant multiplicity 1 at the default bound.
static void BM_QuasiBasisDihedral(benchmark::State& state)
{
    auto g = parse_group("I2(" + std::to_string(state.range(0)) + ")");
    auto m = constant_multiplicity(g, Rational(1));
    int D = default_max_degree(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(quasi_basis(g, m, D));
}
BENCHMARK(BM_QuasiBasisDihedral)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_FreenessRankOne(benchmark::State& state)
{
    auto g = parse_group("A1");
    int m = static_cast<int>(state.range(0));
    auto mm = constant_multiplicity(g, Rational(m));
    for (auto _ : state)
        benchmark::DoNotOptimize(freeness_certificate(g, mm, 8 + 4 * m));
}
BENCHMARK(BM_FreenessRankOne)->DenseRange(1, 5, 2)->Unit(benchmark::kMicrosecond);

static void BM_GaneaTower(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(ganea_tower(static_cast<int>(state.range(0)), 20));
}
BENCHMARK(BM_GaneaTower)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_ChernCharacter(benchmark::State& state)
{
    int m = static_cast<int>(state.range(0));
    auto f = laurent_delta().pow(m) * (LaurentElement::z_power(1) - LaurentElement::z_power(-1));
    for (auto _ : state)
        benchmark::DoNotOptimize(chern_character(m, f, 16));
}
BENCHMARK(BM_ChernCharacter)->Arg(0)->Arg(3)->Unit(benchmark::kMicrosecond);

static void BM_QmbMember(benchmark::State& state)
{
    int D = static_cast<int>(state.range(0));
    auto ring = qmb(bg_series(D), 3, D);
    auto f = laurent_to_series(laurent_delta().pow(3) * LaurentElement::z_power(2), D);
    for (auto _ : state)
        benchmark::DoNotOptimize(ring.member(f));
}
BENCHMARK(BM_QmbMember)->Arg(12)->Arg(48);

static void BM_ThetaTripleProduct(benchmark::State& state)
{
    int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto s = theta(ThetaForm::Sum, -8, 8, N);
        auto p = theta(ThetaForm::Product, -8, 8, N);
        benchmark::DoNotOptimize(s.series.agrees_with(p.series));
    }
}
BENCHMARK(BM_ThetaTripleProduct)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_EllGradedDimension(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ell_graded_dimension(1, n, 12));
}
BENCHMARK(BM_EllGradedDimension)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
