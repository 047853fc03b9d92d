#include "hstar/canonical.hpp"
#include "hstar/classify.hpp"
#include "hstar/correspondence.hpp"
#include "hstar/normal_form.hpp"
#include "hstar/random.hpp"

#include <benchmark/benchmark.h>

using namespace hstar;

namespace {

std::vector<LatticeSimplex> sample(std::size_t dim, std::size_t count) {
  std::mt19937_64 rng(dim);
  std::vector<LatticeSimplex> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_simplex(rng, dim, -4, 4));
  return out;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto simplices = sample(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& s = simplices[i++ % simplices.size()];
    benchmark::DoNotOptimize(smith_normal_form(s.homogeneous_matrix().transpose()));
  }
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 6);

void BM_HStarByGroup(benchmark::State& state) {
  const auto simplices = sample(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hstar_from_group(group_of_simplex(simplices[i++ % simplices.size()])));
}
BENCHMARK(BM_HStarByGroup)->DenseRange(2, 5);

void BM_HStarByCounting(benchmark::State& state) {
  const auto simplices = sample(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hstar_by_counting(simplices[i++ % simplices.size()]));
}
BENCHMARK(BM_HStarByCounting)->DenseRange(2, 5);

void BM_CanonicalForm(benchmark::State& state) {
  const SimplexGroup g = trinomial_family(FamilySpec::parse(state.range(0) == 0 ? "b:2:1:4" : "c:3:1:3"));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(0)->Arg(1);

void BM_VerifyD5(benchmark::State& state) {
  EnumerationBounds b;
  b.allowed_orders = {2, 3, 4, 6, 9};
  b.max_order = 9;
  b.max_rank = 2;
  b.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_classification(2, 5, b));
}
BENCHMARK(BM_VerifyD5)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyD7Elementary(benchmark::State& state) {
  EnumerationBounds b;
  b.elementary_prime = 2;
  b.max_order = 16;
  b.max_rank = 4;
  b.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_classification(2, 7, b));
}
BENCHMARK(BM_VerifyD7Elementary)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
