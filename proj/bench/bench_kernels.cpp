// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "orbitcodes/orbit_code.hpp"

using namespace orbitcodes;

namespace {

const Field kZ2 = Field::prime(2);

// A full-length orbit in G(k, n) under a primitive companion matrix.
std::vector<Subspace> long_orbit(std::size_t k, std::size_t n) {
  for (const Poly& p : list_irreducibles(kZ2, static_cast<unsigned>(n))) {
    if (!is_primitive(p)) continue;
    const ExtensionContext ctx(p);
    const auto u = find_sidon_start_serial(ctx, k);
    return generate_orbit(u ? *u : enumerate_grassmannian(kZ2, k, n).front(), companion_matrix(p)).codewords();
  }
  return {};
}

void BM_MinDistanceSerial(benchmark::State& state) {
  const auto words = long_orbit(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_brute_serial(words));
  state.counters["codewords"] = static_cast<double>(words.size());
}

void BM_MinDistanceParallel(benchmark::State& state) {
  const auto words = long_orbit(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_brute(words));
  state.counters["codewords"] = static_cast<double>(words.size());
}

ExtensionContext primitive_context(unsigned n) {
  for (const Poly& p : list_irreducibles(kZ2, n))
    if (is_primitive(p)) return ExtensionContext(p);
  throw std::logic_error("no primitive polynomial");
}

void BM_SidonSerial(benchmark::State& state) {
  const ExtensionContext ctx = primitive_context(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_sidon_start_serial(ctx, 3));
}

void BM_SidonParallel(benchmark::State& state) {
  const ExtensionContext ctx = primitive_context(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_sidon_start(ctx, 3));
}

}  // namespace

BENCHMARK(BM_MinDistanceSerial)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinDistanceParallel)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SidonSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SidonParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
