#include "repring/chartab/chartable.hpp"
#include "repring/groups/catalog.hpp"
#include "repring/groups/extension.hpp"
#include "repring/lambdaring/adams.hpp"
#include "repring/lambdaring/ringinv.hpp"
#include "repring/twist/cocycle.hpp"
#include "repring/twist/presets.hpp"
#include "repring/twist/twistbuild.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace repring;

void BM_CharacterTable(benchmark::State& state, const char* name) {
  const GroupPtr g = catalog_group(name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(character_table(g));
  }
}
BENCHMARK_CAPTURE(BM_CharacterTable, d8, "D8");
BENCHMARK_CAPTURE(BM_CharacterTable, q8, "Q8");
BENCHMARK_CAPTURE(BM_CharacterTable, c12, "C12");
BENCHMARK_CAPTURE(BM_CharacterTable, d8xc2, "D8xC2");

void BM_AdamsMatrix(benchmark::State& state) {
  const CharacterTable t = character_table(catalog_group("D8xC2"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(adams_matrix(t, state.range(0)));
  }
}
BENCHMARK(BM_AdamsMatrix)->Arg(2)->Arg(3)->Arg(5);

void BM_ExponentFromRing(benchmark::State& state) {
  const CharacterTable t = character_table(catalog_group("D8"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exponent_from_ring(t));
  }
}
BENCHMARK(BM_ExponentFromRing);

void BM_EnumerateCocycles(benchmark::State& state) {
  const GroupPtr g = catalog_group("D8xC2");
  for (auto _ : state) {
    ExtensionData ext = make_extension(g, {0, 2, 4, 6});
    benchmark::DoNotOptimize(enumerate_invariant_nondegenerate(ext));
  }
}
BENCHMARK(BM_EnumerateCocycles);

void BM_BuildTwist(benchmark::State& state) {
  const GroupPtr g = catalog_group("D8");
  const auto cocycles = enumerate_invariant_nondegenerate(
      make_extension(g, {0, 1, 2, 3}));
  for (auto _ : state) {
    ExtensionData ext = make_extension(g, {0, 1, 2, 3});
    benchmark::DoNotOptimize(make_twist(std::move(ext), cocycles[0]));
  }
}
BENCHMARK(BM_BuildTwist);

void BM_TwistedCharacter(benchmark::State& state) {
  const TwistData twist = d8_example();
  const CharacterTable t = character_table(twist.ext.g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(twisted_character(twist, t.irreducibles[4]));
  }
}
BENCHMARK(BM_TwistedCharacter);

void BM_CompareAdams(benchmark::State& state) {
  const TwistData twist = d8_example();
  const CharacterTable original = character_table(twist.ext.g);
  const CharacterTable twisted = character_table(twist.twisted);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare_adams(original, twisted, 2));
  }
}
BENCHMARK(BM_CompareAdams);

}  // namespace

BENCHMARK_MAIN();
