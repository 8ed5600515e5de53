#include <benchmark/benchmark.h>

#include <random>

#include "ontorepair/io.hpp"
#include "ontorepair/pipeline.hpp"
#include "support.hpp"

using namespace onr;
using namespace onr::testing;

namespace {

void BM_ClassifyAtomic(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const int n = static_cast<int>(state.range(0));
  const auto t = random_atomic_tbox(rng, n, 2 * n);
  for (auto _ : state) {
    Classifier c(t);
    benchmark::DoNotOptimize(c.signature().size());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ClassifyAtomic)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_ClassifyEl(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const int n = static_cast<int>(state.range(0));
  const auto t = random_el_tbox(rng, n, 2 * n, 2);
  for (auto _ : state) {
    Classifier c(t);
    benchmark::DoNotOptimize(c.signature().size());
  }
}
BENCHMARK(BM_ClassifyEl)->RangeMultiplier(4)->Range(16, 512);

void BM_AllJustifications(benchmark::State& state) {
  const auto f = basic_fixture();
  const auto scope = f.network.asserted();
  const auto target = atomic_gci("E", "bottom");
  for (auto _ : state) benchmark::DoNotOptimize(all_justifications(scope, target, 64).size());
}
BENCHMARK(BM_AllJustifications);

// Whole pipeline on the fixture at the three scope levels.
void BM_RepairFixture(benchmark::State& state) {
  const auto f = basic_fixture();
  GoldOracle gold(f.gold);
  RepairPlan p;
  p.kb_ontology = static_cast<OntologyLevel>(state.range(0));
  p.kb_alignment = static_cast<AlignmentLevel>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_repair(f.network, f.wrong, p, gold).added.size());
}
BENCHMARK(BM_RepairFixture)->DenseRange(0, 2);

void BM_RepairRandom(benchmark::State& state) {
  const auto inst = random_instance(static_cast<std::uint64_t>(state.range(0)));
  GoldOracle gold(inst.gold);
  for (auto _ : state)
    benchmark::DoNotOptimize(run_repair(inst.network, inst.wrong, RepairPlan::algorithm1(), gold).added.size());
}
BENCHMARK(BM_RepairRandom)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
