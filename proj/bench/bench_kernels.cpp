// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "imcm/parallel.hpp"
#include "imcm/small_cases.hpp"

namespace {

std::vector<imcm::Word> random_words(int count, int rank, int length) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> index(1, rank - 1), point(1, rank), kind(0, 9);
  std::vector<imcm::Word> out;
  for (int i = 0; i < count; ++i) {
    imcm::Word w(rank);
    for (int t = 0; t < length; ++t) {
      const int k = kind(rng);
      if (k == 0) {
        w.push_back(imcm::Letter::eps(point(rng)));
      } else {
        w.push_back(k % 2 ? imcm::Letter::sigma(index(rng)) : imcm::Letter::sigma_inv(index(rng)));
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

template <auto Kernel>
void normalize_words(benchmark::State& state) {
  const auto words = random_words(static_cast<int>(state.range(0)), 5, 12);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(words, imcm::Flavor::sphere_mcg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void product_table(benchmark::State& state) {
  const auto elements = imcm::enumerate_im0n(3).elements;
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(elements));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(elements.size() * elements.size()));
}

}  // namespace

BENCHMARK(normalize_words<imcm::normalize_batch_serial>)->Name("normalize/serial")->Arg(256)->Arg(2048);
BENCHMARK(normalize_words<imcm::normalize_batch_parallel>)->Name("normalize/parallel")->Arg(256)->Arg(2048)->UseRealTime();
BENCHMARK(product_table<imcm::product_table_serial>)->Name("im03_table/serial");
BENCHMARK(product_table<imcm::product_table_parallel>)->Name("im03_table/parallel")->UseRealTime();

BENCHMARK_MAIN();
