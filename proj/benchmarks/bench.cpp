#include <benchmark/benchmark.h>

#include "ymcas/koszul.hpp"
#include "ymcas/matrix.hpp"
#include "ymcas/orbit.hpp"
#include "ymcas/series.hpp"
#include "ymcas/weyl.hpp"
#include "ymcas/ymquotient.hpp"

using namespace ymcas;

namespace {

RatMatrix structured_matrix(std::size_t n) {
  // Integer matrix with a known nontrivial kernel; exercises pivot search
  // and fraction growth without randomness.
  RatMatrix m(n, n + 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n + 3; ++j)
      m.at(i, j) = Rational(static_cast<long>((i * j + i + 2 * j) % 7) - 3);
  return m;
}

void BM_RrefStructured(benchmark::State& state) {
  const RatMatrix m = structured_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    RrefResult r = rref(m);
    benchmark::DoNotOptimize(r.rank());
  }
}

void BM_QuotientBuild(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GradedNilpotentLie g = GradedNilpotentLie::build(3, l);
    benchmark::DoNotOptimize(g.dim());
  }
}

void BM_KoszulSlice(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    HomologyDims h = homology_dims(3, p);
    benchmark::DoNotOptimize(h.h1);
  }
}

void BM_WeylMul(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  WeylElement a = weyl_one(2), b = weyl_one(2);
  for (int k = 0; k < d; ++k) {
    a = weyl_mul(a, weyl_mul(weyl_p(2, 1), weyl_q(2, 1)));
    b = weyl_mul(b, weyl_mul(weyl_q(2, 2), weyl_p(2, 2)));
  }
  for (auto _ : state) {
    WeylElement c = weyl_mul(a, b);
    benchmark::DoNotOptimize(c.terms.size());
  }
}

void BM_StandardPolarization(benchmark::State& state) {
  const GradedNilpotentLie g = GradedNilpotentLie::build(3, 4);
  Functional f;
  f.dual.resize(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    f.dual[i] = Rational(static_cast<long>(i % 5) - 2);
  for (auto _ : state) {
    PolarizationReport rep = standard_polarization(g, f);
    benchmark::DoNotOptimize(rep.weight);
  }
}

} // namespace

BENCHMARK(BM_RrefStructured)->Arg(16)->Arg(64)->Arg(128);
BENCHMARK(BM_QuotientBuild)->Arg(4)->Arg(6)->Arg(7);
BENCHMARK(BM_KoszulSlice)->Arg(3)->Arg(6)->Arg(8);
BENCHMARK(BM_WeylMul)->Arg(2)->Arg(5)->Arg(8);
BENCHMARK(BM_StandardPolarization);

BENCHMARK_MAIN();
