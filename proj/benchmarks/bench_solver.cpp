#include <benchmark/benchmark.h>

#include "elastica/baseline.hpp"
#include "elastica/closed_form.hpp"
#include "elastica/elliptic.hpp"
#include "elastica/seed.hpp"
#include "elastica/solver.hpp"

namespace {

using namespace elastica;

BoundaryProblem example2() {
    BoundaryProblem p;
    p.a = 0;
    p.b = 10;
    p.xb = {3.75605, 2.35942};
    p.vb = {0.911711, -0.410832};
    return p;
}

void BM_JacobiAm(benchmark::State& state) {
    double u = 0.0;
    for (auto _ : state) {
        u += 1e-3;
        benchmark::DoNotOptimize(jacobi_am(u, 2.0));
    }
}
BENCHMARK(BM_JacobiAm);

void BM_SeedProfile(benchmark::State& state) {
    const BoundaryProblem p = example2();
    for (auto _ : state) {
        benchmark::DoNotOptimize(seed_profile(p));
    }
}
BENCHMARK(BM_SeedProfile);

void BM_SampleReference(benchmark::State& state) {
    const ClosedFormParams ex1{ElasticaFamily::orbitlike, 1.0, 2.0, 0.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_reference(ex1, 0.0, 10.0, 200, {0, 0}));
    }
}
BENCHMARK(BM_SampleReference);

void BM_SolveExample2(benchmark::State& state) {
    const BoundaryProblem p = example2();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_clamped_elastica(p, n));
    }
}
BENCHMARK(BM_SolveExample2)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_BaselineExample2(benchmark::State& state) {
    const BoundaryProblem p = example2();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(standard_discretisation(p, n));
    }
}
BENCHMARK(BM_BaselineExample2)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
