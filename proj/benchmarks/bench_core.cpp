#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "invqm/brooks.hpp"
#include "invqm/dimension.hpp"
#include "invqm/invariant_homs.hpp"
#include "invqm/linalg.hpp"
#include "invqm/magnus.hpp"
#include "invqm/word.hpp"

namespace {

using namespace invqm;

// Product of `count` random commutators of random words; always lies in [F,F].
FreeWord random_commutator_product(std::mt19937_64& rng, std::size_t rank, std::size_t len,
                                   std::size_t count) {
  std::uniform_int_distribution<int> gen(1, static_cast<int>(rank));
  std::uniform_int_distribution<int> coin(0, 1);
  auto random_word = [&] {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < len; ++i) {
      letters.push_back(Letter{gen(rng), coin(rng) == 0 ? 1 : -1});
    }
    return FreeWord(rank, letters);
  };
  FreeWord w(rank);
  for (std::size_t k = 0; k < count; ++k) {
    w = multiply(w, commutator(random_word(), random_word()));
  }
  return w;
}

void BM_WedgeClass(benchmark::State& state) {
  std::mt19937_64 rng(17);
  auto const rank = static_cast<std::size_t>(state.range(0));
  auto const w    = random_commutator_product(rng, rank, 64, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge_class(w));
  }
  state.SetLabel("length " + std::to_string(w.length()));
}
BENCHMARK(BM_WedgeClass)->Arg(2)->Arg(4)->Arg(8);

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> entry(-9, 9);
  auto const n = static_cast<std::size_t>(state.range(0));
  MatZ a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = entry(rng);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(a));
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_DefectLowerBound(benchmark::State& state) {
  auto const f = CountingQM::brooks(FreeWord(2, std::vector<Letter>{{1, 1}, {2, 1}}));
  auto const L = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(defect_lower_bound(f, L));
  }
}
BENCHMARK(BM_DefectLowerBound)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_InvHomBasisSurface(benchmark::State& state) {
  auto const p = surface_presentation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(inv_hom_basis(p));
  }
}
BENCHMARK(BM_InvHomBasisSurface)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
