#include <benchmark/benchmark.h>

#include "tiercode/decoders.hpp"
#include "tiercode/sim.hpp"
#include "tiercode/union_code.hpp"

namespace {

using namespace tiercode;

KKSpec rs_kk(const FieldPtr& f) { return KKSpec{f, 5, 4, 2, 1, {f->parse("1111"), f->parse("1234")}}; }

MVSpec mv1(const FieldPtr& f) { return MVSpec{f, 2, 3, 1, 2, 1, {f->gamma_pow(5)}, MvLayout::uncompressed}; }

void BM_BuildUnionKK625(benchmark::State& state) {
  auto f = FieldContext::create(5, {2, 4, 4, 0, 1});
  const auto book = build_codebook(rs_kk(f));
  for (auto _ : state) benchmark::DoNotOptimize(build_union(book).size());
}
BENCHMARK(BM_BuildUnionKK625)->Unit(benchmark::kMillisecond);

void BM_BuildCodebookMV2(benchmark::State& state) {
  auto f = FieldContext::create(3, {2, 1, 0, 0, 0, 0, 1});
  const MVSpec spec{f, 3, 3, 2, 5, 1, {f->gamma_pow(504), f->gamma_pow(294)}, MvLayout::compressed};
  for (auto _ : state) benchmark::DoNotOptimize(build_codebook(spec).words.size());
}
BENCHMARK(BM_BuildCodebookMV2);

void BM_Tier1CorrectKK625(benchmark::State& state) {
  auto f = FieldContext::create(5, {2, 4, 4, 0, 1});
  const auto book = build_codebook(rs_kk(f));
  const auto u = build_union(book);
  Tier1Options opt;
  opt.allow_radius_override = true;
  auto pkt = book.words[17].generator[0];
  pkt[2] = static_cast<Digit>((pkt[2] + 1) % 5);
  for (auto _ : state) benchmark::DoNotOptimize(tier1_decode(pkt, u, 1, Tier1Mode::correct_or_erase, opt));
}
BENCHMARK(BM_Tier1CorrectKK625);

void BM_Tier2SubspaceKK625(benchmark::State& state) {
  auto f = FieldContext::create(5, {2, 4, 4, 0, 1});
  const auto book = build_codebook(rs_kk(f));
  const auto& pkts = book.words[311].generator;
  for (auto _ : state) benchmark::DoNotOptimize(tier2_subspace_decode(pkts, book));
}
BENCHMARK(BM_Tier2SubspaceKK625)->Unit(benchmark::kMillisecond);

void BM_SimTrialDiamond(benchmark::State& state) {
  auto f = FieldContext::create(2, {1, 1, 0, 1});
  const auto book = build_codebook(mv1(f));
  const auto u = build_union(book);
  const auto topo = sim::Topology::diamond();
  sim::SimConfig cfg;
  cfg.errors.fixed_flips = 1;
  cfg.errors.corrupt_packet_prob = 0.5;
  const sim::Scenario sc{&topo, &book, &u, cfg};
  std::uint64_t t = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sim::run_trial(sc, t % 2, sim::Strategy::two_tier, t++));
}
BENCHMARK(BM_SimTrialDiamond);

}  // namespace
