#include <benchmark/benchmark.h>

#include "hodge/catalog.hpp"
#include "hodge/constructions.hpp"
#include "hodge/document.hpp"
#include "hodge/monodromy.hpp"
#include "hodge/verifiers.hpp"

using namespace hodge;

namespace {

Matrix jordan_sum(std::size_t d) {
  Matrix n(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i)
    if ((i + 1) % 3 != 0) n(i, i + 1) = 1;
  return n;
}

void bm_weight_monodromy(benchmark::State& s) {
  Matrix n = jordan_sum(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(weight_monodromy(n));
}
BENCHMARK(bm_weight_monodromy)->DenseRange(2, 8, 2);

void bm_check_pure_orbit(benchmark::State& s) {
  OrbitDatum o = gen_jordan3_orbit(Gauss(1, 1));
  for (auto _ : s) benchmark::DoNotOptimize(check_pure_orbit(o));
}
BENCHMARK(bm_check_pure_orbit);

void bm_sampled_pair(benchmark::State& s) {
  OrbitDatum o = gen_elliptic_pair(Gauss(0, 1), Gauss(1, 2));
  for (auto _ : s) benchmark::DoNotOptimize(check_pure_orbit(o));
}
BENCHMARK(bm_sampled_pair);

void bm_embed_kummer(benchmark::State& s) {
  HodgeDatum h = gen_kummer(Gauss(0, 1));
  for (auto _ : s) benchmark::DoNotOptimize(embed_general(h));
}
BENCHMARK(bm_embed_kummer)->Unit(benchmark::kMillisecond);

void bm_embed_three_weight(benchmark::State& s) {
  HodgeDatum h = gen_three_weight(Gauss(1, 1), 2, Gauss(0, 1));
  for (auto _ : s) benchmark::DoNotOptimize(embed_general(h));
}
BENCHMARK(bm_embed_three_weight)->Unit(benchmark::kMillisecond);

void bm_document_round_trip(benchmark::State& s) {
  auto entries = catalog();
  for (auto _ : s)
    for (const auto& e : entries)
      if (e.mixed) benchmark::DoNotOptimize(parse_mixed(serialize(*e.mixed)));
}
BENCHMARK(bm_document_round_trip)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
