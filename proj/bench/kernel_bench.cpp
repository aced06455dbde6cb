// Serial against OpenMP kernels: hom objects, exponentials and cone categories.

#include <benchmark/benchmark.h>

#include "intcat/limits/cones.hpp"

using namespace intcat;

namespace {

InternalCategory chain_cat(int n) {
  std::vector<std::string> el;
  std::vector<std::pair<std::string, std::string>> order;
  for (int i = 0; i < n; ++i) el.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) order.emplace_back(el[i], el[i + 1]);
  return poset_category(el, order);
}

Execution mode_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_HomObject(benchmark::State& state) {
  auto a = chain_cat(4), b = chain_cat(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(hom_object(a, b, mode_of(state)).object().total_size());
}

void BM_ExponentialCat(benchmark::State& state) {
  auto a = chain_cat(3), b = chain_cat(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(exponential_cat(a, b, mode_of(state)).cat.arr().total_size());
}

void BM_ConesCategory(benchmark::State& state) {
  auto a = chain_cat(static_cast<int>(state.range(1)));
  auto shape = chain_cat(3);
  auto f0 = tabulate(shape.obj(), a.obj(), [](ObjectId, ElementId x) { return x; });
  auto d = functor_from_objects(shape, a, f0);
  for (auto _ : state) benchmark::DoNotOptimize(cones_category(d, mode_of(state)).cat.obj().total_size());
}

}  // namespace

BENCHMARK(BM_HomObject)->ArgsProduct({{0, 1}, {6, 10}});
BENCHMARK(BM_ExponentialCat)->ArgsProduct({{0, 1}, {4, 6}});
BENCHMARK(BM_ConesCategory)->ArgsProduct({{0, 1}, {8, 16}});

BENCHMARK_MAIN();
