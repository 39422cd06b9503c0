#include <benchmark/benchmark.h>

#include "hpms/continuation.hpp"
#include "hpms/germ.hpp"
#include "hpms/hp_system.hpp"
#include "hpms/series.hpp"

using namespace hpms;

namespace {

AlgebraicCurve cbrt_curve() {
    GaussianRational one(1);
    return AlgebraicCurve(2, {{0, 3, one}, {3, 0, -one}, {0, 0, one}});
}

ExactGermTuple cbrt_germs(long order) {
    return power_tuple<GaussianRational>(cbrt_curve(), GermSpec::pole(1, GaussianRational(1)),
                                         parse_expr("1/w"), 2, order);
}

ExactSeries dense_series(long len) {
    std::vector<GaussianRational> c;
    for (long i = 0; i < len; ++i)
        c.push_back(GaussianRational(Rational(i + 1, 2 * i + 3)));
    return ExactSeries::from_coeffs(0, std::move(c), 2 * len);
}

void bm_series_mul_exact(benchmark::State& state) {
    auto a = dense_series(state.range(0));
    auto b = dense_series(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void bm_series_mul_numeric(benchmark::State& state) {
    ScopedPrecision sp(256);
    auto a = to_numeric(dense_series(state.range(0)));
    auto b = to_numeric(dense_series(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void bm_fiber_roots(benchmark::State& state) {
    ScopedPrecision sp(static_cast<unsigned>(state.range(0)));
    CurveContext ctx(cbrt_curve());
    BigComplex z(BigFloat(2), BigFloat(1));
    for (auto _ : state) benchmark::DoNotOptimize(ctx.fiber(z));
}

void bm_solve_exact(benchmark::State& state) {
    long n = state.range(0);
    auto germs = cbrt_germs(3 * n + 2);
    for (auto _ : state) benchmark::DoNotOptimize(solve_hp(germs, n, 2, Backend::Exact));
}

void bm_solve_numeric(benchmark::State& state) {
    ScopedPrecision sp(256);
    long n = state.range(0);
    auto germs = cbrt_germs(3 * n + 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_hp(germs, n, 2, Backend::Numeric, 256));
}

BENCHMARK(bm_series_mul_exact)->Arg(32)->Arg(128);
BENCHMARK(bm_series_mul_numeric)->Arg(32)->Arg(128);
BENCHMARK(bm_fiber_roots)->Arg(128)->Arg(256);
BENCHMARK(bm_solve_exact)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(bm_solve_numeric)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
