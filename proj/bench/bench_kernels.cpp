#include "slub/coupling.hpp"
#include "slub/sl.hpp"
#include "slub/ub.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace slub;

namespace {

Exec exec_of(const benchmark::State& state)
{
    return state.range(1) == 0 ? Exec::Serial : Exec::Parallel;
}

Field random_field(int m, Alignment al)
{
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    const Grid1D g = build_grid(-1.0, 1.0, m);
    std::vector<double> v(static_cast<std::size_t>(al == Alignment::NodeCentered ? m + 1 : m));
    for (auto& x : v)
        x = d(rng);
    return make_field(g, al, v);
}

void BM_sl_advection(benchmark::State& state)
{
    const Field w = random_field(static_cast<int>(state.range(0)), Alignment::NodeCentered);
    for (auto _ : state)
        benchmark::DoNotOptimize(sl_advection_step(w, 0.7, exec_of(state)));
}

void BM_sl_hj(benchmark::State& state)
{
    const Field w = random_field(static_cast<int>(state.range(0)), Alignment::NodeCentered);
    const LegendreTable t = legendre_transform(Hamiltonian::abs_value(1.0), ControlSet::uniform(-1.0, 1.0, 21));
    for (auto _ : state)
        benchmark::DoNotOptimize(sl_hj_step(w, t, 0.6 * w.grid.dx, exec_of(state)));
}

void BM_ub(benchmark::State& state)
{
    const int m = static_cast<int>(state.range(0));
    const Field c = random_field(m, Alignment::CellCentered);
    const CourantNumbers cn{std::vector<double>(static_cast<std::size_t>(m), -0.6),
                            std::vector<double>(static_cast<std::size_t>(m), 0.6)};
    for (auto _ : state)
        benchmark::DoNotOptimize(ub_step(c, cn, exec_of(state)));
}

void BM_classify(benchmark::State& state)
{
    const Field w = random_field(static_cast<int>(state.range(0)), Alignment::NodeCentered);
    const RegularityParams p = RegularityParams::from_slope_bound(1e5);
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(w, p, exec_of(state)));
}

} // namespace

BENCHMARK(BM_sl_advection)->ArgsProduct({{100000, 1000000}, {0, 1}});
BENCHMARK(BM_sl_hj)->ArgsProduct({{100000, 1000000}, {0, 1}});
BENCHMARK(BM_ub)->ArgsProduct({{100000, 1000000}, {0, 1}});
BENCHMARK(BM_classify)->ArgsProduct({{100000, 1000000}, {0, 1}});

BENCHMARK_MAIN();
