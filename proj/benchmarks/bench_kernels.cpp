#include <benchmark/benchmark.h>

#include <cosserat/algebra.hpp>
#include <cosserat/dynamics.hpp>
#include <cosserat/energy.hpp>
#include <cosserat/initial.hpp>
#include <cosserat/random.hpp>
#include <cosserat/reduction3d.hpp>
#include <cosserat/waves.hpp>

using namespace cosserat;

namespace {

Model chiral_model() {
    Model m;
    m.material = MaterialParams::liu_preset(m.material, 0.2);
    m.material.m3 = 0.05;
    m.selector = {ModelKind::Chiral, CouplingKind::Skew};
    return m;
}

void BM_Polar2(benchmark::State& state) {
    SplitMix64 rng(1);
    Mat2 F{{1.0 + rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2), 1.0 + rng.uniform(-0.2, 0.2)}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(F);
        benchmark::DoNotOptimize(polar2(F));
    }
}
BENCHMARK(BM_Polar2);

void BM_TotalEnergy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid g(n, n, 1.0, 1.0);
    const FieldState s = random_smooth_state_with_rates(g, 3, 0.05, 3);
    Model m;
    m.material.chi = 0.5;
    for (auto _ : state) benchmark::DoNotOptimize(total_energy(s, m).total());
    state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}
BENCHMARK(BM_TotalEnergy)->Arg(32)->Arg(64)->Arg(128);

void BM_AnalyticVariations(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid g(n, n, 1.0, 1.0);
    const FieldState s = random_smooth_state(g, 4, 0.05, 3);
    Model m;
    m.material.chi = 0.5;
    for (auto _ : state) benchmark::DoNotOptimize(analytic_variations(s, m));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}
BENCHMARK(BM_AnalyticVariations)->Arg(32)->Arg(64)->Arg(128);

void BM_RhsNonlinear(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid g(n, n, 1.0, 1.0);
    const FieldState s = random_smooth_state(g, 5, 0.05, 3);
    Model m;
    m.material.chi = 0.5;
    for (auto _ : state) benchmark::DoNotOptimize(rhs_nonlinear(s, m));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}
BENCHMARK(BM_RhsNonlinear)->Arg(32)->Arg(64)->Arg(128);

void BM_RhsChiral(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid g(n, n, 1.0, 1.0);
    const FieldState s = random_smooth_state(g, 6, 0.05, 3);
    const Model m = chiral_model();
    for (auto _ : state) benchmark::DoNotOptimize(rhs_chiral(s, m));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}
BENCHMARK(BM_RhsChiral)->Arg(32)->Arg(64)->Arg(128);

void BM_RhsLinearChiral(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid g(n, n, 1.0, 1.0);
    const FieldState s = random_smooth_state(g, 7, 0.05, 3);
    const Model m = chiral_model();
    for (auto _ : state) benchmark::DoNotOptimize(rhs_linear_chiral(s, m.material));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}
BENCHMARK(BM_RhsLinearChiral)->Arg(32)->Arg(64)->Arg(128);

void BM_LeapfrogStep(benchmark::State& state) {
    const Grid g(64, 64, 1.0, 1.0);
    const Model m;
    LeapfrogIntegrator it(random_smooth_state_with_rates(g, 8, 0.01, 3), make_rhs(m, Equations::Full));
    const double dt = 0.1 * stable_dt_estimate(g, m.material);
    for (auto _ : state) it.step(dt);
}
BENCHMARK(BM_LeapfrogStep);

void BM_DispersionBranches(benchmark::State& state) {
    WaveParams w;
    w.A = 0.2;
    w.gamma = 0.02;
    w.mu_c = 0.5;
    double k = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dispersion_branches(k, w));
        k = k < 20.0 ? k + 0.01 : 0.5;
    }
}
BENCHMARK(BM_DispersionBranches);

void BM_ReductionChecks(benchmark::State& state) {
    const PlanarSample3D s = PlanarSample3D::standard(9, 50);
    const ChiralProbe probe = ChiralProbe::standard(9, 50);
    for (auto _ : state) {
        benchmark::DoNotOptimize(first_problem_check(s));
        benchmark::DoNotOptimize(second_problem_check(s));
        benchmark::DoNotOptimize(chirality_inversion_check(probe));
    }
}
BENCHMARK(BM_ReductionChecks);

}  // namespace

BENCHMARK_MAIN();
