// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include <vector>

#include "idealspace/kernels.hpp"
#include "idealspace/ring.hpp"

namespace {

using namespace idealspace;

// Intervals [i, i + 3) on 20 points: a generator set whose closures are large.
std::vector<PointSet> intervals() {
  std::vector<PointSet> out;
  for (std::size_t i = 0; i + 3 <= 20; ++i) out.push_back(PointSet((std::uint64_t{7}) << i));
  return out;
}

template <auto Fn>
void BM_union(benchmark::State& state) {
  const auto gens = intervals();
  for (auto _ : state) benchmark::DoNotOptimize(Fn(gens, 1'000'000));
}

template <auto Fn>
void BM_intersection(benchmark::State& state) {
  std::vector<PointSet> gens;
  for (std::size_t i = 0; i < 16; ++i) gens.push_back(PointSet(((std::uint64_t{1} << 16) - 1) & ~(std::uint64_t{1} << i)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(gens, PointSet((std::uint64_t{1} << 16) - 1), 1'000'000));
}

template <auto Fn>
void BM_axioms(benchmark::State& state) {
  const RingPtr r = make_zmod(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(Fn(r->size(), r->add_table(), r->mul_table(), r->zero(), r->one()));
}

BENCHMARK(BM_union<kernels::serial::union_closure>)->Name("union_closure/serial");
BENCHMARK(BM_union<kernels::parallel::union_closure>)->Name("union_closure/parallel");
BENCHMARK(BM_intersection<kernels::serial::intersection_closure>)->Name("intersection_closure/serial");
BENCHMARK(BM_intersection<kernels::parallel::intersection_closure>)->Name("intersection_closure/parallel");
BENCHMARK(BM_axioms<kernels::serial::ring_axioms>)->Name("ring_axioms/serial")->Arg(32)->Arg(64);
BENCHMARK(BM_axioms<kernels::parallel::ring_axioms>)->Name("ring_axioms/parallel")->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
