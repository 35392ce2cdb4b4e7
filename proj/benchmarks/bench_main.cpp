#include <benchmark/benchmark.h>

#include "hgfae/hgfae.hpp"

using namespace hgfae;

namespace {

Real R(double x, long bits = 256) { return Real(x, bits); }

void BM_log_gamma(benchmark::State& st) {
  auto prec = Precision::with_bits(st.range(0));
  BigComplex z(R(7.25, st.range(0)), R(-3.5, st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(log_gamma(z, prec));
}
BENCHMARK(BM_log_gamma)->Arg(128)->Arg(256)->Arg(1024);

// one z per dispatch route: series, 1-z, 1/z, Pfaff region
void BM_hgf_eval(benchmark::State& st) {
  static const double zs[][2] = {{0.3, 0.0}, {0.9, 0.05}, {-6.0, 1.0}, {0.5, 0.8}};
  auto prec = Precision::with_bits(256);
  auto in = hgf::make_input(BigComplex(R(1.25)), BigComplex(R(0.5)), BigComplex(R(2.75)),
                            BigComplex(R(zs[st.range(0)][0]), R(zs[st.range(0)][1])));
  for (auto _ : st) benchmark::DoNotOptimize(hgf::hgf_eval(in, prec));
}
BENCHMARK(BM_hgf_eval)->DenseRange(0, 3);

void BM_hgf_quadrature_A(benchmark::State& st) {
  auto prec = Precision::with_bits(st.range(0));
  auto in = hgf::make_input(BigComplex(R(1.5)), BigComplex(R(0.5)), BigComplex(R(3.0)), BigComplex(R(0.4)));
  for (auto _ : st) benchmark::DoNotOptimize(hgf::hgf_quadrature_A(in, prec));
}
BENCHMARK(BM_hgf_quadrature_A)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_ae_ac_full(benchmark::State& st) {
  AsymCase c{BigComplex(R(1)), BigComplex(R(0.5)), BigComplex(R(1)), R(2), R(0), R(1), BigComplex(R(50))};
  BigComplex z(R(0.8));
  for (auto _ : st) benchmark::DoNotOptimize(ac::ae_ac_full(c, z));
}
BENCHMARK(BM_ae_ac_full);

void BM_sd_integrate(benchmark::State& st) {
  auto prec = Precision::with_bits(128);
  auto pf = msd::make_phase(msd::PhaseKind::AcSmall, R(0.5));
  msd::Integrand f{msd::IntegrandKind::EulerA, BigComplex(1), BigComplex(1), BigComplex(2), BigComplex(R(0.3))};
  BigComplex lam(R(100));
  auto sd = msd::ac_saddle(pf, lam);
  auto path = msd::close_path(msd::sd_path_trace(pf, sd, lam, R(5), R(0.05)), BigComplex(R(0)), BigComplex(R(1)));
  for (auto _ : st) benchmark::DoNotOptimize(msd::sd_integrate(pf, f, path, lam, prec));
}
BENCHMARK(BM_sd_integrate)->Unit(benchmark::kMillisecond);

void BM_partition_closed(benchmark::State& st) {
  lattice::LatticeGasSystem s{static_cast<unsigned long>(st.range(0)), static_cast<unsigned long>(st.range(0) / 4),
                              static_cast<unsigned long>(st.range(0) / 3), mpq_class(1, 3), mpq_class(1, 2)};
  for (auto _ : st) benchmark::DoNotOptimize(lattice::partition_closed(s));
}
BENCHMARK(BM_partition_closed)->Arg(30)->Arg(300)->Arg(3000);

void BM_partition_bruteforce(benchmark::State& st) {
  lattice::LatticeGasSystem s{static_cast<unsigned long>(st.range(0)), static_cast<unsigned long>(st.range(0) / 4),
                              static_cast<unsigned long>(st.range(0) / 3), mpq_class(1, 3), mpq_class(1, 2)};
  for (auto _ : st) benchmark::DoNotOptimize(lattice::partition_bruteforce(s));
}
BENCHMARK(BM_partition_bruteforce)->Arg(12)->Arg(20);

}  // namespace
BENCHMARK_MAIN();
