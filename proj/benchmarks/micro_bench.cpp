#include <benchmark/benchmark.h>

#include "cwl/coulomb.hpp"
#include "cwl/lorentz.hpp"

namespace {

void bm_ln_gamma(benchmark::State& state) {
    cwl::Complex z{0.75, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(cwl::ln_gamma(z));
}
BENCHMARK(bm_ln_gamma);

void bm_whittaker_m(benchmark::State& state) {
    cwl::Complex mu{0.0, 1.0}, nu{0.75, 0.0}, z{0.0, 2.0};
    for (auto _ : state) benchmark::DoNotOptimize(cwl::whittaker_m(mu, nu, z));
}
BENCHMARK(bm_whittaker_m);

void bm_bessel_k(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cwl::bessel_k(0.25, 2.0));
}
BENCHMARK(bm_bessel_k);

void bm_coulomb_f(benchmark::State& state) {
    cwl::CoulombParams p{-0.5, 1.0, 2.0};
    for (auto _ : state) benchmark::DoNotOptimize(cwl::coulomb_f(p));
}
BENCHMARK(bm_coulomb_f);

void bm_coulomb_f_large(benchmark::State& state) {
    cwl::CoulombParams p{-0.5, 1.0, 20.0};
    for (auto _ : state) benchmark::DoNotOptimize(cwl::coulomb_f(p));
}
BENCHMARK(bm_coulomb_f_large);

void bm_ferrers_p(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(cwl::ferrers_p(0.25, cwl::Complex(-0.5, 1.0), 0.6));
}
BENCHMARK(bm_ferrers_p);

void bm_quad_oscillatory(benchmark::State& state) {
    cwl::QuadConfig cfg;
    cfg.oscillation_period_hint = 2.0 * cwl::pi / 3.0;
    auto f = [](double x) { return cwl::Complex(std::cos(3.0 * x) / (1.0 + x * x), 0.0); };
    for (auto _ : state)
        benchmark::DoNotOptimize(cwl::integrate_semi_infinite(f, 0.0, cfg));
}
BENCHMARK(bm_quad_oscillatory);

void bm_coeff_plus(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cwl::coeff_plus(2.0, 1.0, -0.5));
}
BENCHMARK(bm_coeff_plus);

} // namespace

BENCHMARK_MAIN();
