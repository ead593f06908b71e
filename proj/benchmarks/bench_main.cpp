#include <benchmark/benchmark.h>

#include <random>

#include "qpf/car_motion.hpp"
#include "qpf/embedding.hpp"
#include "qpf/enumerate.hpp"
#include "qpf/factorization.hpp"
#include "qpf/fixtures.hpp"
#include "qpf/surgery.hpp"

using namespace qpf;

static void BM_CullerEvaluate(benchmark::State& state) {
  const auto c = parse_context("a=Z,b=Z");
  const MixedFactorization f{c,
                             {{parse_word("a^-1 b a", c), parse_word("a^-2 b a b^-1", c)},
                              {parse_word("b a b^-1", c), parse_word("b^2", c)}},
                             {}};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_mixed(f));
}
BENCHMARK(BM_CullerEvaluate);

static void BM_Reduce(benchmark::State& state) {
  const auto c = parse_context("Z3,Z,Z5");
  std::mt19937_64 rng(1);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(c, rng, static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) {
    for (std::size_t i = 0; i + 1 < words.size(); ++i) benchmark::DoNotOptimize(multiply(words[i], invert(words[i + 1])));
  }
  state.SetItemsProcessed(state.iterations() * 63);
}
BENCHMARK(BM_Reduce)->Arg(8)->Arg(64)->Arg(512);

static void BM_PosSearch(benchmark::State& state) {
  const auto c = parse_context("Z,Z");
  const auto n = state.range(0);
  const auto w = power(parse_word("a b", c), n);
  SearchOptions o;
  o.radius = static_cast<std::size_t>(n + 2);
  o.cap = 2 * n;
  for (auto _ : state) benchmark::DoNotOptimize(quasiperiodicity_lower(w, o));
}
BENCHMARK(BM_PosSearch)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_MixedSearch(benchmark::State& state) {
  const auto c = parse_context("Z,Z");
  const auto n = state.range(0);
  const auto w = power(parse_word("a b", c), n);
  SearchOptions o;
  o.radius = static_cast<std::size_t>(2 * n);
  o.cap = 2 * n + 2;
  for (auto _ : state) benchmark::DoNotOptimize(mixed_genus_upper(w, o));
}
BENCHMARK(BM_MixedSearch)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_SurgeryPipeline(benchmark::State& state) {
  const auto c = parse_context("Z,Z");
  std::mt19937_64 rng(9);
  std::vector<SeedInput> seeds;
  for (int i = 0; i < 16; ++i) seeds.push_back(random_seed_input(c, rng));
  for (auto _ : state) {
    for (const auto& s : seeds) benchmark::DoNotOptimize(lemma1_pipeline(s));
  }
  state.SetItemsProcessed(state.iterations() * 16);
}
BENCHMARK(BM_SurgeryPipeline)->Unit(benchmark::kMillisecond);

static void BM_CarMotionSimulate(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto m = random_closed_map(static_cast<std::size_t>(state.range(0)), rng);
  const auto motion = uniform_motion(m, random_admissible_cars(m, rng));
  for (auto _ : state) benchmark::DoNotOptimize(simulate(m, motion));
}
BENCHMARK(BM_CarMotionSimulate)->Arg(6)->Arg(12)->Arg(24);

static void BM_EmbedMu(benchmark::State& state) {
  const auto c = parse_context("Z3,Z5,Z,Z2");
  std::mt19937_64 rng(4);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(c, rng, 16, 3));
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(embed_mu(w));
  }
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_EmbedMu);
BENCHMARK_MAIN();
