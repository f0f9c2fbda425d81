#include <deltakit/catalog.hpp>
#include <deltakit/report.hpp>

#include <benchmark/benchmark.h>

using namespace deltakit;

namespace {

const Scenario& secant_scenario() {
    static Scenario s = builtin_scenario("dP4-secant-PinEQ");
    return s;
}

void BM_SweepThreefold(benchmark::State& state) {
    AlgebraPtr alg = secant_scenario().make_algebra();
    ThreefoldClass mk = expand_relation(alg, "minusK");
    ThreefoldClass b = expand_relation(alg, "HP3");
    for (auto _ : state) {
        ChamberedDecomposition cd = sweep_threefold(mk, b);
        benchmark::DoNotOptimize(cd.tau);
    }
}
BENCHMARK(BM_SweepThreefold);

void BM_DecomposeSurface(benchmark::State& state) {
    const Scenario& s = secant_scenario();
    LatticePtr lat = s.make_surface();
    auto curves = s.make_curves(lat);
    BlowUp bl = blow_up_point(lat, s.blow_mults(), curves);
    auto blown = transform_curves(bl, curves, s.blow_mults());
    blown.push_back({"F", bl.f_class(), true, 1, 0});
    DivisorClass a(lat, {Rat(4), Rat(-1), Rat(-1), Rat(-1), Rat(-1), Rat(-1)});
    DivisorClass d = bl.pullback(a) - bl.f_class().scaled(Rat(13, 4));
    for (auto _ : state) {
        ZariskiResult z = decompose_surface(d, blown);
        benchmark::DoNotOptimize(z.negative);
    }
}
BENCHMARK(BM_DecomposeSurface);

void BM_InnerSweep(benchmark::State& state) {
    const Scenario& s = secant_scenario();
    LatticePtr lat = s.make_surface();
    auto curves = s.make_curves(lat);
    BlowUp bl = blow_up_point(lat, s.blow_mults(), curves);
    auto blown = transform_curves(bl, curves, s.blow_mults());
    blown.push_back({"F", bl.f_class(), true, 1, 0});
    DivisorClass a(lat, {Rat(15, 4), Rat(-1), Rat(-1), Rat(-1), Rat(-1), Rat(-1)});
    for (auto _ : state) {
        ChamberedDecomposition cd = sweep_surface_at(bl.pullback(a), bl.f_class(), blown);
        benchmark::DoNotOptimize(cd.tau);
    }
}
BENCHMARK(BM_InnerSweep);

void BM_PointFlag(benchmark::State& state) {
    const Scenario& s = secant_scenario();
    for (auto _ : state) {
        Report r = run_report(s);
        benchmark::DoNotOptimize(r.certified);
    }
}
BENCHMARK(BM_PointFlag)->Unit(benchmark::kMillisecond);

void BM_FullRegression(benchmark::State& state) {
    for (auto _ : state) {
        RegressionSummary sum = regression_check();
        benchmark::DoNotOptimize(sum.pass);
    }
}
BENCHMARK(BM_FullRegression)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
