#include <benchmark/benchmark.h>

#include "itrev/conditionals.hpp"
#include "itrev/operators.hpp"
#include "itrev/postulates.hpp"

namespace {

using namespace itrev;

void BM_Revise(benchmark::State& state) {
  const auto kind = static_cast<RevisionKind>(state.range(0));
  const auto tpos = all_tpos(3);
  std::size_t i = 0;
  std::uint32_t a = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(revise(tpos[i], WorldSet(a), kind));
    i = (i + 7919) % tpos.size();
    a = a % 255 + 1;
  }
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_Revise)->DenseRange(0, 2);

void BM_Contract(benchmark::State& state) {
  const auto method = static_cast<ContractionMethod>(state.range(0));
  const auto tpos = all_tpos(3);
  std::size_t i = 0;
  std::uint32_t a = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(contract(tpos[i], WorldSet(a), method));
    i = (i + 7919) % tpos.size();
    a = a % 255 + 1;
  }
  state.SetLabel(std::string(to_string(method)));
}
BENCHMARK(BM_Contract)->DenseRange(0, 2);

void BM_EnumerateTpos(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for_each_tpo(n, [&](const Tpo&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateTpos)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CheckPostulate(benchmark::State& state) {
  const auto p = static_cast<PostulateId>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_postulate(p, RevisionKind::Restrained, ContractionMethod::StqLex, CheckScope{}, CheckOptions{1}));
  }
  state.SetLabel(std::string(to_string(p)));
}
BENCHMARK(BM_CheckPostulate)
    ->Arg(static_cast<int>(PostulateId::DP2))
    ->Arg(static_cast<int>(PostulateId::CR4))
    ->Arg(static_cast<int>(PostulateId::IIAP))
    ->Arg(static_cast<int>(PostulateId::Neut))
    ->Unit(benchmark::kMillisecond);

void BM_RationalClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Tpo t = tpo_at(n, tpo_count(n) / 3);
  MixedSet delta = conditional_set(t);
  delta.add_plain(t.universe() - t.first_cell() | WorldSet::of(*t.first_cell().begin()));
  for (auto _ : state) benchmark::DoNotOptimize(rational_closure(delta));
}
BENCHMARK(BM_RationalClosure)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_RationalClosureFast(benchmark::State& state) {
  const Tpo t = tpo_at(3, tpo_count(3) / 3);
  const WorldSet a = t.universe() - t.first_cell() | WorldSet::of(*t.first_cell().begin());
  for (auto _ : state) benchmark::DoNotOptimize(rational_closure_fast(t, a));
}
BENCHMARK(BM_RationalClosureFast);

}  // namespace
BENCHMARK_MAIN();
