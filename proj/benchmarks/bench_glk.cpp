#include <benchmark/benchmark.h>

#include <cmath>

#include "glk/binet.hpp"
#include "glk/glaisher.hpp"
#include "glk/quadrature.hpp"
#include "glk/specialfn.hpp"

namespace gl = glk::glaisher;
namespace bn = glk::binet;

static void BM_Representation(benchmark::State& state) {
    const auto id = static_cast<gl::RepresentationId>(state.range(0));
    std::size_t evals = 0;
    for (auto _ : state) {
        const auto r = gl::eval_representation(id);
        evals = r.evals;
        benchmark::DoNotOptimize(r.log_a_estimate);
    }
    state.SetLabel(std::string(gl::to_string(id)));
    state.counters["evals"] = static_cast<double>(evals);
}
BENCHMARK(BM_Representation)->DenseRange(0, 9)->Unit(benchmark::kMicrosecond);

static void BM_Mu(benchmark::State& state) {
    const auto method = bn::all_mu_methods[state.range(0)];
    for (auto _ : state) benchmark::DoNotOptimize(bn::mu(2.0, method).value);
    state.SetLabel(std::string(bn::to_string(method)));
}
BENCHMARK(BM_Mu)->DenseRange(0, std::size(bn::all_mu_methods) - 1)->Unit(benchmark::kMicrosecond);

static void BM_BarnesLimit(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gl::barnes_limit_log_a(n).log_a_estimate);
}
BENCHMARK(BM_BarnesLimit)->Arg(50)->Arg(500)->Arg(2000);

static void BM_PrimeProduct(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gl::prime_product_log_a(state.range(0)).log_a_estimate);
}
BENCHMARK(BM_PrimeProduct)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_LerchSum(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(glk::special::lerch_sum_check(0.5, 20).value);
}
BENCHMARK(BM_LerchSum)->Unit(benchmark::kMicrosecond);

static void BM_VerifyAll(benchmark::State& state) {
    const bool parallel = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(gl::verify_all({}, 100000, 50, parallel).pass);
    state.SetLabel(parallel ? "parallel" : "serial");
}
BENCHMARK(BM_VerifyAll)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
