#include <benchmark/benchmark.h>

#include "lb/braiding.hpp"
#include "lb/fox.hpp"
#include "lb/matrix.hpp"
#include "lb/presented.hpp"
#include "lb/series.hpp"

using namespace lb;

namespace {

const Alphabet xy = Alphabet::parse("x y");

// [[...[x, y], x], ...] with `depth` generators.
Word nested_commutator(std::size_t depth) {
  Word w = Word::generator(xy, 0);
  for (std::size_t i = 1; i < depth; ++i) w = commutator(w, Word::generator(xy, static_cast<int>(i % 2)));
  return w;
}

void BM_IteratedSum(benchmark::State& state) {
  Word w = nested_commutator(static_cast<std::size_t>(state.range(0)));
  Key key = {0, 1, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(iterated_sum(key, w, Ring::integers()));
  state.counters["letters"] = static_cast<double>(w.length());
}
BENCHMARK(BM_IteratedSum)->DenseRange(2, 8, 2);

void BM_WeightReduce(benchmark::State& state) {
  Word w = nested_commutator(static_cast<std::size_t>(state.range(0)));
  TensorElement t = parse_tensor("x|y|x|y + y|x|x|y - x|x|y", xy, Ring::integers());
  for (auto _ : state) benchmark::DoNotOptimize(braiding_polynomial_by_reduction(t, w));
  state.counters["letters"] = static_cast<double>(w.length());
}
BENCHMARK(BM_WeightReduce)->DenseRange(2, 6, 2);

void BM_MagnusExpand(benchmark::State& state) {
  Word w = nested_commutator(5);
  auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(magnus_expand(w, order, Ring::integers()));
}
BENCHMARK(BM_MagnusExpand)->DenseRange(3, 7, 2);

void BM_AugmentedFox(benchmark::State& state) {
  Word w = nested_commutator(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(augmented_fox(w, {0, 1, 0}, Ring::integers()));
}
BENCHMARK(BM_AugmentedFox)->DenseRange(2, 6, 2);

void BM_SmithForm(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Matrix m(Ring::integers(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(Ring::integers(), static_cast<long>((i * 7 + j * 13) % 19) - 9);
  for (auto _ : state) benchmark::DoNotOptimize(smith_form(m));
}
BENCHMARK(BM_SmithForm)->RangeMultiplier(2)->Range(4, 32);

void BM_InvariantsSurface(benchmark::State& state) {
  Presentation p = parse_presentation("gens: a1 b1 a2 b2\nrel: [a1, b1] [a2, b2]");
  auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariants_basis(p, order, Ring::integers()));
}
BENCHMARK(BM_InvariantsSurface)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_InvariantsHeisenbergF2(benchmark::State& state) {
  Presentation p = parse_presentation("gens: x y z\nrel: x^2\nrel: y^2\nrel: z^2\nrel: [x, y] z^-1");
  auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariants_basis(p, order, Ring::prime_field(2)));
}
BENCHMARK(BM_InvariantsHeisenbergF2)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
