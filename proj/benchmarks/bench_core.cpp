#include <benchmark/benchmark.h>

#include <chc/dirichlet.hpp>
#include <chc/discretetest.hpp>

using namespace chc;

namespace {

const TriangleGroup& group34c() {
  static TriangleGroup G(3, sporadic("s4c").value, "s4c");
  return G;
}

void BM_CycMul(benchmark::State& state) {
  Cyc a = sporadic("s2").value * two_cos(84, 5);
  Cyc b = sporadic("s7").value + Cyc::root_of_unity(36, 7);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMul);

void BM_CycSign(benchmark::State& state) {
  Cyc v = (sporadic("s5").value.abs2() - Cyc(2L)) * two_cos(40, 3);
  for (auto _ : state) benchmark::DoNotOptimize(v.sign());
}
BENCHMARK(BM_CycSign);

void BM_WordMatrix(benchmark::State& state) {
  const TriangleGroup& G = group34c();
  int i = 0;
  // rotate through words to defeat the group's word cache
  const char* words[] = {"(12)^7", "(1232')^5", "12323'2'1", "(123)^6"};
  for (auto _ : state) {
    benchmark::DoNotOptimize(G.word_matrix(words[i & 3]) * G.R1());
    ++i;
  }
}
BENCHMARK(BM_WordMatrix);

void BM_Classify(benchmark::State& state) {
  const TriangleGroup& G = group34c();
  Mat3x M = G.word_matrix("(12)^2");
  for (auto _ : state) benchmark::DoNotOptimize(classify(M, G.H()));
}
BENCHMARK(BM_Classify);

void BM_GiraudSample(benchmark::State& state) {
  PartialDomain D(group34c());
  for (auto _ : state)
    benchmark::DoNotOptimize(D.giraud_sample(0, 2, (int)state.range(0)));
}
BENCHMARK(BM_GiraudSample)->Arg(64)->Arg(200);

void BM_CensusRow(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(census_nondiscrete(10, 10, {"s4c"}));
}
BENCHMARK(BM_CensusRow);

}  // namespace

BENCHMARK_MAIN();
