#include <benchmark/benchmark.h>

#include <cmath>

#include "skindepth/force.hpp"
#include "skindepth/impedance.hpp"

using namespace skindepth;

static void bm_adaptive_sech(benchmark::State& state) {
    for (auto _ : state) {
        auto r = quad::integrate_semi_infinite([](double x) { return 1.0 / std::cosh(x); },
                                               0.0, quad::Decay::sech(), {1e-8, 0.0});
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(bm_adaptive_sech);

static void bm_boltzmann_imag(benchmark::State& state) {
    auto gold = preset("gold");
    double v = 0.1;
    for (auto _ : state) {
        auto d = boltzmann_imag(1e-3, v, gold);
        benchmark::DoNotOptimize(d.eps_l);
        v = v < 100.0 ? v * 1.001 : 0.1;  // defeat value caching
    }
}
BENCHMARK(bm_boltzmann_imag);

static void bm_lindhard_real(benchmark::State& state) {
    auto gold = preset("gold");
    for (auto _ : state) {
        auto d = lindhard_real(0.05, 0.5, 250.0, gold);
        benchmark::DoNotOptimize(d.eps_l);
    }
}
BENCHMARK(bm_lindhard_real);

static void bm_impedance_imag(benchmark::State& state) {
    auto gold = preset("gold");
    ResponsePoint p{FrequencyAxis::imaginary, 1e-3, 0.1};
    for (auto _ : state) {
        auto z = nonlocal_pair_imag(p, gold, {});
        benchmark::DoNotOptimize(z.z_p);
    }
}
BENCHMARK(bm_impedance_imag);

static void bm_impedance_real(benchmark::State& state) {
    auto potassium = preset("potassium");
    ResponsePoint p{FrequencyAxis::real, 1e-3, 5e-4};
    for (auto _ : state) {
        auto z = nonlocal_pair_real(p, potassium, {});
        benchmark::DoNotOptimize(z.z_p);
    }
}
BENCHMARK(bm_impedance_real);

static void bm_force_local(benchmark::State& state) {
    auto gold = preset("gold-force-fit");
    ForceOptions o;
    o.model = ResponseModel::local;
    for (auto _ : state) {
        auto f = force_plate_plate(250.0, gold, o);
        benchmark::DoNotOptimize(f.value);
    }
}
BENCHMARK(bm_force_local)->Unit(benchmark::kMillisecond);

static void bm_correction_275nm(benchmark::State& state) {
    auto gold = preset("gold");
    for (auto _ : state) {
        auto c = nonlocal_correction(275.0, gold, Geometry::plate_plate);
        benchmark::DoNotOptimize(c.rel_total);
    }
}
BENCHMARK(bm_correction_275nm)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
