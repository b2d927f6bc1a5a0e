#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bpw/mforacle.hpp"
#include "bpw/qalg.hpp"
#include "bpw/stable.hpp"
#include "bpw/tilting.hpp"

namespace {

using namespace bpw;

std::vector<StableObject> sample_objects(const WeightSystem& ws, int count) {
  std::mt19937 rng(1);
  std::vector<StableObject> out;
  for (int k = 0; k < count; ++k) {
    std::vector<std::int64_t> ell, tw;
    for (int i = 0; i < ws.n(); ++i) {
      ell.push_back(std::uniform_int_distribution<int>(1, ws.p(i) - 1)(rng));
      tw.push_back(std::uniform_int_distribution<int>(-ws.p(i), ws.p(i))(rng));
    }
    out.push_back(StableObject::U(GradeElement::from_raw(ws, std::span<const std::int64_t>(ell), 0),
                                  GradeElement::from_raw(ws, std::span<const std::int64_t>(tw), 0),
                                  std::uniform_int_distribution<int>(-3, 3)(rng)));
  }
  return out;
}

const std::vector<std::vector<int>> kTypes{{3, 4}, {3, 4, 5}, {2, 3, 5}};

void BM_HomDim(benchmark::State& state) {
  const WeightSystem ws(kTypes[static_cast<size_t>(state.range(0))]);
  const std::vector<StableObject> objs = sample_objects(ws, 64);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hom_dim(objs[i % 64], objs[(i * 7 + 3) % 64]));
    ++i;
  }
  state.SetLabel(ws.to_string());
}
BENCHMARK(BM_HomDim)->DenseRange(0, 2);

void BM_Oracle(benchmark::State& state) {
  const WeightSystem ws(kTypes[static_cast<size_t>(state.range(0))]);
  const std::vector<StableObject> objs = sample_objects(ws, 16);
  std::vector<GradedMF> mfs;
  for (const StableObject& o : objs) mfs.push_back(mf_of(o));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stable_hom_dim_oracle(mfs[i % 16], mfs[(i * 5 + 1) % 16], 0));
    ++i;
  }
  state.SetLabel(ws.to_string());
}
BENCHMARK(BM_Oracle)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_HomMatrix(benchmark::State& state) {
  const WeightSystem ws({3, 4, 5});
  const TiltingFamily fam = make_family(ws, FamilySpec::replicated(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(hom_matrix(fam));
  state.SetLabel(fam.spec.to_string() + " on (3,4,5)");
}
BENCHMARK(BM_HomMatrix)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_CoxeterPolynomial(benchmark::State& state) {
  const AlgebraPresentation g = gamma_quiver(WeightSystem({3, 4, 5}), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coxeter_polynomial(g));
  state.SetLabel(g.name);
}
BENCHMARK(BM_CoxeterPolynomial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
