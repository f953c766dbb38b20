#include "sl2wt/fusion.hpp"
#include "sl2wt/virasoro.hpp"

#include <benchmark/benchmark.h>

using namespace sl2wt;

static void BM_GramDeterminant(benchmark::State& state) {
    long N = state.range(0);
    Rational c = rat(11, 7), h = rat(5, 3);
    for (auto _ : state) {
        QMatrix g = gram_matrix(c, h, N); // copy so the memo does not hide the work
        benchmark::DoNotOptimize(g.determinant());
    }
}
BENCHMARK(BM_GramDeterminant)->Arg(4)->Arg(6);

static void BM_SingularVector(benchmark::State& state) {
    long rs = state.range(0);
    Rational t = rat(5, 3);
    Rational c = virasoro_c(t), h = virasoro_h(rs, 1, t);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_singular_vectors(c, h, rs));
}
BENCHMARK(BM_SingularVector)->Arg(3)->Arg(4);

static void BM_MinimalCharacter(benchmark::State& state) {
    MinimalLabel lab = minimal_label(4, 3, 2, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(minimal_character(lab, state.range(0)));
}
BENCHMARK(BM_MinimalCharacter)->Arg(10)->Arg(20);

static void BM_FuseRelaxed(benchmark::State& state) {
    AdmissibleLevel lvl = level_from_uv(5, 3);
    ModuleLabel e = make_label(lvl, 1, ModuleKind::E, 2, 2, rat(1, 7));
    for (auto _ : state)
        for (long r = 1; r <= 4; ++r) benchmark::DoNotOptimize(fuse(r, e));
}
BENCHMARK(BM_FuseRelaxed);

BENCHMARK_MAIN();
