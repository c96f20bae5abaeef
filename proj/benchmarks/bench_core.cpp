#include <benchmark/benchmark.h>

#include "hopfforge/constructors.hpp"

using namespace hopfforge;

namespace {

Ctx q() { return GradingCtx::trivial(FieldSpec::rational()); }
Ctx f101() { return GradingCtx::trivial(FieldSpec::prime(101)); }

void BM_rational_matmul(benchmark::State& state) {
    Ctx ctx = q();
    const std::size_t n = state.range(0);
    Obj x = Obj::atom(ctx, make_atom_ungraded("X", n, ctx->group()));
    Mat a = Mat::identity(ctx->field(), n);
    for (std::size_t i = 0; i < n; ++i)
        a.set(i, (i + 1) % n, Scalar::parse(ctx->field(), "1/3"));
    for (auto _ : state) benchmark::DoNotOptimize(a.mul(a));
    (void)x;
}
BENCHMARK(BM_rational_matmul)->Arg(16)->Arg(64);

void BM_braiding_super(benchmark::State& state) {
    Ctx ctx = super_ctx(FieldSpec::rational());
    Obj x = Obj::atom(ctx, make_atom("X", {{Deg{0}, 3}, {Deg{1}, 3}}));
    Obj xx = tensor_obj(x, x);
    for (auto _ : state) benchmark::DoNotOptimize(braiding(xx, xx));
}
BENCHMARK(BM_braiding_super);

void BM_check_bat_direct_h4(benchmark::State& state) {
    Ctx ctx = q();
    CrossDatum d = sweedler_biproduct(ctx).datum;
    for (auto _ : state) benchmark::DoNotOptimize(check_bat_direct(d).pass());
}
BENCHMARK(BM_check_bat_direct_h4);

void BM_check_bat_direct_ds3_f101(benchmark::State& state) {
    Ctx ctx = f101();
    CrossDatum d = drinfeld_double(ctx, GroupDatum::symmetric(3)).datum;
    for (auto _ : state) benchmark::DoNotOptimize(check_bat_direct(d).pass());
}
BENCHMARK(BM_check_bat_direct_ds3_f101);

void BM_antipode_solve_dz3(benchmark::State& state) {
    Ctx ctx = q();
    HopfBundle h = drinfeld_double(ctx, GroupDatum::cyclic(3)).bundle;
    for (auto _ : state) {
        ConvInverse ci = convolution_inverse(Mor::identity(h.obj), h.coalgebra(), h.algebra());
        benchmark::DoNotOptimize(ci.side);
    }
}
BENCHMARK(BM_antipode_solve_dz3);

}  // namespace

BENCHMARK_MAIN();
