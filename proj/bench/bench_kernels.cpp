// Serial reference kernels against their OpenMP counterparts. Both compute the
// same blocked compensated sums, so only wall time differs.
#include <pmshape/fixtures.hpp>
#include <pmshape/kernels.hpp>

#include <benchmark/benchmark.h>

#include <map>

namespace {

using namespace pmshape;

const ShapeVector& landmarks(std::size_t n) {
    static std::map<std::size_t, ShapeVector> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, fixtures::gaussian_shape(n, 42)).first;
    return it->second;
}

template <auto Kernel>
void power_sums(benchmark::State& state) {
    const auto& z = landmarks(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(z.landmarks(), 20));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void lattice_moments(benchmark::State& state) {
    const auto img = fixtures::asymmetric_blobs(static_cast<std::size_t>(state.range(0)));
    const kernels::PixelLattice lattice{img.width(), img.height(), img.intensities(),
                                        img.frame_position(0, 0), img.pitch()};
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(lattice, 20));
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

}  // namespace

BENCHMARK(power_sums<kernels::serial::power_sums>)->Name("power_sums/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 19);
BENCHMARK(power_sums<kernels::parallel::power_sums>)->Name("power_sums/openmp")->RangeMultiplier(8)->Range(1 << 10, 1 << 19);
BENCHMARK(lattice_moments<kernels::serial::lattice_moments>)->Name("lattice_moments/serial")->Arg(256)->Arg(512)->Arg(1024);
BENCHMARK(lattice_moments<kernels::parallel::lattice_moments>)->Name("lattice_moments/openmp")->Arg(256)->Arg(512)->Arg(1024);

BENCHMARK_MAIN();
