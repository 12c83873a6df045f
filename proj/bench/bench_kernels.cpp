// Serial reference vs OpenMP kernels on Tribonacci window data.
#include <benchmark/benchmark.h>

#include "pisot/cps.hpp"
#include "pisot/kernels.hpp"
#include "pisot/relations.hpp"
#include "pisot/window.hpp"
#include "pisot/nielsen.hpp"

#include <map>

using namespace pisot;

namespace {

struct Data {
  WindowApprox window;
  PointClouds clouds;
  double eps = 0.0;
};

const Data& data(int depth) {
  static std::map<int, Data> cache;
  auto it = cache.find(depth);
  if (it != cache.end()) return it->second;
  const Substitution s = Substitution::parse({"c", "ca", "cb"});
  const Cps cps(pisot_check(abelianization(s.map())));
  Data d;
  d.window = iterate_window(boundary_endomorphism(s), canonical_seeds(cps), 10, cps);
  d.clouds = point_cloud_window(s, cps, depth);
  d.eps = max_segment_length(d.window);
  return cache.emplace(depth, std::move(d)).first->second;
}

template <auto Kernel>
void BM_covered(benchmark::State& state) {
  const Data& d = data(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Kernel(d.clouds[2], d.window.boundaries[2], d.eps));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d.clouds[2].size()));
}

template <auto Kernel>
void BM_cross_distance(benchmark::State& state) {
  const Data& d = data(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(d.clouds[0], d.clouds[1]));
}

template <auto Kernel>
void BM_self_intersections(benchmark::State& state) {
  const Data& d = data(8);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(d.window.boundaries[2]));
}

template <auto Kernel>
void BM_first_match(benchmark::State& state) {
  const Endomorphism s1 = Endomorphism::parse({"cb", "c", "cab"});
  const Endomorphism s1p = Endomorphism::parse({"bc", "c", "cba"});
  const auto& moves = nielsen_moves();
  const std::size_t n = moves.size() * moves.size();
  // never matches: every candidate is screened
  auto pred = [&](std::size_t i) {
    const Endomorphism rho = compose(moves[i / moves.size()].map, moves[i % moves.size()].map);
    return compose(s1p, rho) == compose(rho, s1) && rho.rank() < 0;
  };
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(n, pred));
}

}  // namespace

BENCHMARK(BM_covered<kernels::count_covered_serial>)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_covered<kernels::count_covered>)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cross_distance<kernels::min_cross_distance_serial>)->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cross_distance<kernels::min_cross_distance>)->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_self_intersections<kernels::count_self_intersections_serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_self_intersections<kernels::count_self_intersections>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_first_match<kernels::first_match_serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_first_match<kernels::first_match>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
