#include <benchmark/benchmark.h>

#include <random>

#include "spintomo/kernels.hpp"
#include "spintomo/tomography.hpp"

using namespace spintomo;

namespace {

EulerAngles fixed_angles() { return EulerAngles(0.9, 1.3, 2.1); }

DensityMatrix make_state(int dim) {
  std::mt19937_64 eng(5);
  std::normal_distribution<double> gauss;
  ComplexMatrix g(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = Complex(gauss(eng), gauss(eng));
  ComplexMatrix rho = multiply(g, adjoint(g));
  rho = scale(1.0 / trace(rho).real(), rho);
  return DensityMatrix(rho);
}

void BM_ClebschGordan(benchmark::State& state) {
  const HalfInt j = HalfInt::from_twice(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(clebsch_gordan(j, HalfInt::from_twice(3), j, HalfInt::from_twice(-1),
                                            HalfInt::whole(2), HalfInt::whole(1)));
}
BENCHMARK(BM_ClebschGordan);

void BM_WignerSmallD_j50(benchmark::State& state) {
  const HalfInt j = HalfInt::whole(50);
  for (auto _ : state)
    benchmark::DoNotOptimize(wigner_small_d(j, HalfInt::whole(10), HalfInt::whole(-6), 1.1));
}
BENCHMARK(BM_WignerSmallD_j50);

void BM_RotationMatrix(benchmark::State& state) {
  const HalfInt j = HalfInt::from_twice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rotation_matrix(j, fixed_angles()));
}
BENCHMARK(BM_RotationMatrix)->Arg(2)->Arg(5)->Arg(11);

void BM_SLBasis(benchmark::State& state) {
  const HalfInt j = HalfInt::from_twice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sl_basis(j));
}
BENCHMARK(BM_SLBasis)->Arg(2)->Arg(5)->Arg(11);

void BM_Dequantizer(benchmark::State& state) {
  const HalfInt j = HalfInt::from_twice(4);
  const SLBasis basis = sl_basis(j);
  const TomographyPoint x{HalfInt::whole(1), fixed_angles()};
  for (auto _ : state) benchmark::DoNotOptimize(dequantizer(j, x, basis));
}
BENCHMARK(BM_Dequantizer);

void BM_QuantizerExponential(benchmark::State& state) {
  const HalfInt j = HalfInt::from_twice(4);
  const TomographyPoint x{HalfInt::whole(1), fixed_angles()};
  for (auto _ : state) benchmark::DoNotOptimize(quantizer_exponential(j, x));
}
BENCHMARK(BM_QuantizerExponential);

void BM_EighDim8(benchmark::State& state) {
  std::mt19937_64 eng(9);
  std::normal_distribution<double> gauss;
  ComplexMatrix g(8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) g(r, c) = Complex(gauss(eng), gauss(eng));
  const ComplexMatrix h = scale(0.5, add(g, adjoint(g)));
  for (auto _ : state) benchmark::DoNotOptimize(eigh(h));
}
BENCHMARK(BM_EighDim8);

void BM_TomogramRoundTrip(benchmark::State& state) {
  const HalfInt j = HalfInt::from_twice(static_cast<int>(state.range(0)));
  const QuadratureGrid grid = make_grid(j);
  const DensityMatrix rho = make_state(dimension(j));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(sample_tomogram(rho, grid)));
}
BENCHMARK(BM_TomogramRoundTrip)->Arg(1)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_StarKernelNumericQutrit(benchmark::State& state) {
  const HalfInt j = HalfInt::whole(1);
  const SLBasis basis = sl_basis(j);
  const TomographyPoint x3{HalfInt::whole(1), fixed_angles()};
  const TomographyPoint x2{HalfInt::whole(0), EulerAngles(0.2, 2.2, 0.0)};
  const TomographyPoint x1{HalfInt::whole(-1), EulerAngles(4.4, 0.7, 1.0)};
  for (auto _ : state) benchmark::DoNotOptimize(star_kernel_numeric(j, x3, x2, x1, basis));
}
BENCHMARK(BM_StarKernelNumericQutrit);

void BM_StarKernelClosedQutrit(benchmark::State& state) {
  const AxisVector n3 = axis_vector(fixed_angles());
  const AxisVector n2 = axis_vector(EulerAngles(0.2, 2.2, 0.0));
  const AxisVector n1 = axis_vector(EulerAngles(4.4, 0.7, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(star_kernel_qutrit(1, n3, 0, n2, -1, n1));
}
BENCHMARK(BM_StarKernelClosedQutrit);

void BM_MarginalizeKernelQubit(benchmark::State& state) {
  const HalfInt j = HalfInt::from_twice(1);
  const QuadratureGrid grid = make_grid(j);
  const TomographyPoint x2{HalfInt::from_twice(1), fixed_angles()};
  const TomographyPoint x1{HalfInt::from_twice(-1), EulerAngles(0.2, 2.2, 0.0)};
  for (auto _ : state) benchmark::DoNotOptimize(marginalize_kernel(j, x2, x1, grid));
}
BENCHMARK(BM_MarginalizeKernelQubit)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
