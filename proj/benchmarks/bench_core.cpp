// Microbenchmarks for the hot paths: the encoding chain, signature folding,
// the exhaustive search and the packing arithmetic. All exact, so costs are
// dominated by GMP limb work; watch these when touching fold loops.

#include <benchmark/benchmark.h>

#include <vector>

#include "qfalab/harness.hpp"
#include "qfalab/kronpoly.hpp"
#include "qfalab/polypack.hpp"
#include "qfalab/reduction.hpp"

namespace {

using namespace qfalab;

MmpcpInstance toy_instance() {
  MmpcpInstance inst;
  inst.sigma = {"s1", "s2"};
  inst.delta = {"d1", "d2"};
  inst.h = {{"s1", {"d1"}}, {"s2", {"d1", "d2"}}};
  inst.g = {{"s1", {"d1", "d1"}}, {"s2", {"d2"}}};
  return inst;
}

void BM_WordMatrix(benchmark::State& state) {
  std::vector<int> word;
  for (int i = 0; i < state.range(0); ++i) word.push_back(1 + i % 3);
  for (auto _ : state) benchmark::DoNotOptimize(word_matrix(word));
}
BENCHMARK(BM_WordMatrix)->Arg(2)->Arg(8)->Arg(32);

void BM_AcceptanceSignature(benchmark::State& state) {
  const RadicalQfa q = compile_injectivity(toy_instance());
  std::vector<std::string> word;
  for (int i = 0; i < state.range(0); ++i)
    word.push_back(q.letters[static_cast<std::size_t>(i) % q.letters.size()]);
  for (auto _ : state) benchmark::DoNotOptimize(acceptance_signature(q, word));
}
BENCHMARK(BM_AcceptanceSignature)->Arg(1)->Arg(4)->Arg(16);

void BM_CollisionSearchToy(benchmark::State& state) {
  const RadicalQfa q = compile_injectivity(toy_instance());
  for (auto _ : state)
    benchmark::DoNotOptimize(collision_search(q, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CollisionSearchToy)->Arg(2)->Arg(3);

void BM_PackTuple(benchmark::State& state) {
  std::vector<PentadicFraction> xs;
  for (int i = 0; i < 6; ++i) xs.emplace_back(mpz_class(2 + i), 3);
  for (auto _ : state) benchmark::DoNotOptimize(pack_tuple(xs));
}
BENCHMARK(BM_PackTuple);

void BM_FourSquareSplit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(four_square_split(999999937));
}
BENCHMARK(BM_FourSquareSplit);

void BM_EvalLazy(benchmark::State& state) {
  std::map<std::string, RatMatrix> bases;
  bases.emplace("a", quat_to_matrix(quat_gen_a()));
  bases.emplace("b", quat_to_matrix(quat_gen_b()));
  Polynomial poly;
  poly[{2, 1}] = 1;
  poly[{0, 0}] = 3;
  const KronPlan plan = make_plan(4, {{1, 1}, {1, 2}}, poly);
  const std::vector<std::string> word{"a", "b", "a"};
  for (auto _ : state) benchmark::DoNotOptimize(eval_lazy(bases, plan, word));
}
BENCHMARK(BM_EvalLazy);

}  // namespace

BENCHMARK_MAIN();
