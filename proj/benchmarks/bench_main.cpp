#include "koszulkit/genetic.hpp"
#include "koszulkit/linalg.hpp"
#include "koszulkit/quadratic.hpp"
#include "koszulkit/resolution.hpp"
#include "koszulkit/twist.hpp"
#include "koszulkit/zoo.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace koszulkit;

namespace {

Matrix random_matrix(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-5, 5);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

CategorySpec family(int k) {
    switch (k) {
        case 0: return {"FI", {}, {}, {}};
        case 1: return {"FI_gamma", FiniteGroup::cyclic(2), {}, {}};
        case 2: return {"FI_d", {}, 2, {}};
        default: return {"VI", {}, {}, 2};
    }
}

const char* family_name(int k) {
    static const char* names[] = {"FI", "FI_Z2", "FI_2", "VI_2"};
    return names[k];
}

}  // namespace

static void BM_Rref(benchmark::State& state) {
    const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_Linearize(benchmark::State& state) {
    const auto c = make_category(family(static_cast<int>(state.range(0))));
    const int hi = state.range(0) == 3 ? 3 : 4;
    for (auto _ : state) benchmark::DoNotOptimize(linearize(*c, {0, hi}));
    state.SetLabel(family_name(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Linearize)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_KoszulCertificate(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int hi = k == 3 ? 3 : 4;
    const auto l = linearize(*make_category(family(k)), {0, hi});
    for (auto _ : state)
        for (int x = 0; x <= hi; ++x) benchmark::DoNotOptimize(koszul_certificate(l, x, hi - x));
    state.SetLabel(family_name(k));
}
BENCHMARK(BM_KoszulCertificate)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_QuadraticDual(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int hi = k == 3 ? 3 : 4;
    const auto l = linearize(*make_category(family(k)), {0, hi});
    for (auto _ : state) benchmark::DoNotOptimize(quadratic_dual(l));
    state.SetLabel(family_name(k));
}
BENCHMARK(BM_QuadraticDual)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_TwistDualIso(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto c = make_category(family(k));
    for (auto _ : state) benchmark::DoNotOptimize(check_twist_dual_iso(*c, {0, 4}));
    state.SetLabel(family_name(k));
}
BENCHMARK(BM_TwistDualIso)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_Theta(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int hi = k == 3 ? 3 : 4;
    const auto c = make_category(family(k));
    for (auto _ : state)
        for (int x = 0; x + 1 <= hi; ++x) benchmark::DoNotOptimize(verify_theta(*c, x, {0, hi}));
    state.SetLabel(family_name(k));
}
BENCHMARK(BM_Theta)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_CrucialLemma(benchmark::State& state) {
    const auto l = linearize(*make_category(family(static_cast<int>(state.range(0)))), {0, 4});
    const GradedModule m = projective_cover(regular_simple(l, 1)).kernel;
    for (auto _ : state) benchmark::DoNotOptimize(verify_crucial_lemma(*l, m, 2));
    state.SetLabel(family_name(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CrucialLemma)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
