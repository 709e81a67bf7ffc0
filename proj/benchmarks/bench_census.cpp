#include <benchmark/benchmark.h>

#include "blockcensus/counting.hpp"
#include "blockcensus/suite.hpp"

using namespace blockcensus;

namespace {

InstanceRecord gamma52_instance() {
    return parse_instance("p=5\nd=2\nlabel=Gamma(5^2)\ngen=0 1 3 4\ngen=1 0 4 4\n");
}

void BM_MatInverse(benchmark::State& state) {
    const Mat m = make_mat(7, 4, {1, 2, 0, 3, 0, 1, 4, 0, 2, 0, 2, 5, 0, 6, 0, 3});
    mat_inv(m);  // invertibility probe
    for (auto _ : state) benchmark::DoNotOptimize(mat_inv(m));
}
BENCHMARK(BM_MatInverse);

void BM_FieldExtBuild(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ext_field_build(7, state.range(0)));
}
BENCHMARK(BM_FieldExtBuild)->Arg(2)->Arg(3)->Arg(4);

void BM_OrbitDecomposition(benchmark::State& state) {
    const GroupHandle g = gamma_group(7, 4, GammaKind::full);
    for (auto _ : state) benchmark::DoNotOptimize(orbit_decomposition(g, ActionSide::dual));
}
BENCHMARK(BM_OrbitDecomposition);

void BM_GroupOrderChain(benchmark::State& state) {
    const GroupHandle g = gamma_group(7, 4, GammaKind::full);  // order 9600 on 2401 points
    for (auto _ : state) benchmark::DoNotOptimize(group_order(g));
}
BENCHMARK(BM_GroupOrderChain)->Unit(benchmark::kMillisecond);

void BM_ClosureEnumeration(benchmark::State& state) {
    const GroupHandle g = gamma_group(5, 2, GammaKind::full);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_elements(g));
}
BENCHMARK(BM_ClosureEnumeration);

void BM_ClassCount(benchmark::State& state) {
    const auto elems = enumerate_elements(gamma_group(5, 2, GammaKind::full));
    for (auto _ : state) benchmark::DoNotOptimize(class_count(elems));
}
BENCHMARK(BM_ClassCount);

void BM_CountBlock(benchmark::State& state) {
    const InstanceRecord rec = gamma52_instance();
    for (auto _ : state) benchmark::DoNotOptimize(count_block(rec, LambdaContext{}));
}
BENCHMARK(BM_CountBlock)->Unit(benchmark::kMillisecond);

void BM_BruteForceOracle(benchmark::State& state) {
    const InstanceRecord rec = gamma52_instance();  // affine group of order 1200
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_k(rec));
}
BENCHMARK(BM_BruteForceOracle)->Unit(benchmark::kMillisecond);

void BM_SemilinearScan(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(semilinear_scan(5));
}
BENCHMARK(BM_SemilinearScan);

void BM_RealizeSL23(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(realize_small_group(5, 2, 24, GroupFingerprint::sl23()));
}
BENCHMARK(BM_RealizeSL23)->Unit(benchmark::kMillisecond);

void BM_ImprimitiveGrid(benchmark::State& state) {
    for (auto _ : state) {
        for (u32 p = 5; p <= 71; ++p) {
            if (!is_prime(p)) continue;
            for (u32 m = 1; m <= 4; ++m) {
                benchmark::DoNotOptimize(verify_imprimitive(p, m, 3, 2));
                benchmark::DoNotOptimize(verify_imprimitive(p, m, 4, 3));
            }
        }
    }
}
BENCHMARK(BM_ImprimitiveGrid);

}  // namespace

BENCHMARK_MAIN();
