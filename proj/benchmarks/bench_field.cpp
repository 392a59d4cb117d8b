#include <benchmark/benchmark.h>

#include <random>

#include "tiercode/gf.hpp"
#include "tiercode/metrics.hpp"

namespace {

using tiercode::FieldContext;
using tiercode::FieldElement;

std::vector<FieldElement> random_elements(const FieldContext& f, std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> pick(1, f.order() - 1);
  std::vector<FieldElement> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f.from_packed(pick(rng)));
  return v;
}

void BM_MulTable(benchmark::State& state) {
  auto f = FieldContext::create(3, {2, 1, 0, 0, 0, 0, 1});
  const auto v = random_elements(*f, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(v[i & 1023] * v[(i + 1) & 1023]);
    ++i;
  }
}
BENCHMARK(BM_MulTable);

void BM_MulPolynomial(benchmark::State& state) {
  auto f = FieldContext::create(3, {2, 1, 0, 0, 0, 0, 1});
  const auto v = random_elements(*f, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f->mul_polynomial(v[i & 1023], v[(i + 1) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_MulPolynomial);

void BM_Inverse(benchmark::State& state) {
  auto f = FieldContext::create(5, {2, 4, 4, 0, 1});
  const auto v = random_elements(*f, 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(inv(v[i++ & 1023]));
}
BENCHMARK(BM_Inverse);

void BM_MinDistance(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<unsigned> bit(0, 1);
  tiercode::VectorSet s;
  while (s.size() < static_cast<std::size_t>(state.range(0))) {
    tiercode::BaseVector v(16);
    for (auto& d : v) d = static_cast<tiercode::Digit>(bit(rng));
    s.insert(v);
  }
  const auto mode = state.range(1) ? tiercode::MinDistanceMode::neighborhood : tiercode::MinDistanceMode::pairwise;
  for (auto _ : state) benchmark::DoNotOptimize(tiercode::min_distance(s, 2, mode));
}
BENCHMARK(BM_MinDistance)->Args({256, 0})->Args({256, 1})->Args({4096, 0})->Args({4096, 1});

}  // namespace
