#include <benchmark/benchmark.h>

#include "fieldclique/arith.hpp"
#include "fieldclique/cayley.hpp"
#include "fieldclique/charsum.hpp"
#include "fieldclique/ff.hpp"
#include "fieldclique/verify.hpp"

namespace fc = fieldclique;

static void BM_FieldBuild(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto e = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fc::ff::FieldTable::build(p, e));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fc::ipow(p, e)));
}
BENCHMARK(BM_FieldBuild)->Args({3, 4})->Args({5, 6})->Args({3, 10})->Args({13, 5})->Unit(benchmark::kMillisecond);

static void BM_Adjacency(benchmark::State& state) {
  const auto field = fc::ff::build_field(5, 6);
  const fc::cayley::CayleyGraph g(field, fc::cayley::GraphKind::peisert(62));
  const std::uint32_t q = field->order();
  std::uint32_t u = 1, v = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.adjacent(fc::ff::Element{u}, fc::ff::Element{v}));
    u = (u * 7 + 3) % q;
    v = (v * 11 + 5) % q;
    if (u == v) v = (v + 1) % q;
  }
}
BENCHMARK(BM_Adjacency);

static void BM_ThetaScan(benchmark::State& state) {
  const auto field = fc::ff::build_field(static_cast<std::uint64_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(fc::charsum::katz_bound_check(field, 1, 4));
}
BENCHMARK(BM_ThetaScan)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_CliqueNumber(benchmark::State& state) {
  const auto field = fc::ff::build_field(static_cast<std::uint64_t>(state.range(0)), 2);
  const fc::cayley::CayleyGraph g(field, fc::cayley::GraphKind::paley(2));
  for (auto _ : state) benchmark::DoNotOptimize(fc::cayley::clique_number(g));
}
BENCHMARK(BM_CliqueNumber)->Arg(7)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_VerifyPeisert15625(benchmark::State& state) {
  const auto field = fc::ff::build_field(5, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fc::verify::verify_case({5, 1, 6, fc::cayley::GraphKind::peisert(62)}, field));
  }
}
BENCHMARK(BM_VerifyPeisert15625)->Unit(benchmark::kSecond)->Iterations(1);
BENCHMARK_MAIN();
