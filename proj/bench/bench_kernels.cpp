#include <benchmark/benchmark.h>

#include <random>

#include "qfrob/linalg.hpp"
#include "qfrob/torus.hpp"
#include "qfrob/uq_sl2.hpp"

using namespace qfrob;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(1) ? Exec::parallel : Exec::serial; }

void BM_TorusMul(benchmark::State& st) {
    const auto* rp = make_root_params(static_cast<int>(st.range(0)));
    TorusFn a = torus_fn(kappa(rp, 1)) + torus_fn(kappa_prime(rp, 2));
    TorusFn b = torus_fn(kappa(rp, 3)) + torus_fn(kappa_prime(rp, 0));
    for (auto _ : st) benchmark::DoNotOptimize(TorusFn::mul(a, b, exec_of(st)));
}

void BM_PBWMul(benchmark::State& st) {
    const int l = static_cast<int>(st.range(0));
    const auto* rp = make_root_params(l);
    const auto bd = PBWBounds::defaults(rp);
    const auto k = PBWElement::torus(torus_fn(kappa(rp, 1)), bd);
    const auto x = PBWElement::e_pow(rp, l, bd) * k + PBWElement::f_pow(rp, 2, bd);
    const auto y = PBWElement::f_pow(rp, l, bd) + k * PBWElement::e_pow(rp, 1, bd);
    for (auto _ : st) benchmark::DoNotOptimize(pbw_mul(x, y, exec_of(st)));
}

void BM_Rref(benchmark::State& st) {
    const auto* rp = make_root_params(5);
    const size_t n = static_cast<size_t>(st.range(0));
    std::mt19937 gen(7);
    std::uniform_int_distribution<long> dist(-3, 3);
    Matrix<CycloScalar> base(n, n, CycloScalar::zero(rp));
    for (auto& v : base.a) v = CycloScalar(rp, dist(gen));
    for (auto _ : st) {
        auto m = base;
        benchmark::DoNotOptimize(st.range(1) ? rref_parallel(m) : rref_serial(m));
    }
}

}  // namespace

BENCHMARK(BM_TorusMul)->ArgsProduct({{5, 15}, {0, 1}});
BENCHMARK(BM_PBWMul)->ArgsProduct({{3, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rref)->ArgsProduct({{24, 48}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
