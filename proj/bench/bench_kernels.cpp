// Parallel kernels against their serial twins on Stirling-type triangles and dense series.

#include <benchmark/benchmark.h>

#include "umbra/kernels.hpp"
#include "umbra/umbral.hpp"

using namespace umbra;

namespace {

Triangle falling(std::size_t N) { return basic(named::forward_difference(N + 1), N, BasicRoute::genfunc).triangle(); }
Triangle touchard(std::size_t N) { return basic(named::log1p(N + 1), N, BasicRoute::genfunc).triangle(); }

Series dense(std::size_t N, long shift) {
    Series s(N);
    for (std::size_t k = 0; k <= N; ++k) s[k] = Rat(static_cast<long>(k) + shift, static_cast<long>(k % 7) + 1);
    return s;
}

template <Triangle (*F)(const Triangle&, const Triangle&)>
void compose(benchmark::State& st) {
    std::size_t N = static_cast<std::size_t>(st.range(0));
    Triangle a = falling(N), b = touchard(N);
    for (auto _ : st) benchmark::DoNotOptimize(F(a, b));
}

template <Triangle (*F)(const Triangle&)>
void invert(benchmark::State& st) {
    Triangle t = touchard(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(F(t));
}

template <Series (*F)(const Series&, const Series&)>
void mul(benchmark::State& st) {
    std::size_t N = static_cast<std::size_t>(st.range(0));
    Series f = dense(N, 1), g = dense(N, -3);
    for (auto _ : st) benchmark::DoNotOptimize(F(f, g));
}

}  // namespace

BENCHMARK(compose<kernels::compose>)->Name("compose/parallel")->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(compose<kernels::serial::compose>)->Name("compose/serial")->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(invert<kernels::invert>)->Name("invert/parallel")->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(invert<kernels::serial::invert>)->Name("invert/serial")->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(mul<kernels::mul>)->Name("mul/parallel")->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(mul<kernels::serial::mul>)->Name("mul/serial")->Arg(64)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
