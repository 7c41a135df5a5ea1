#include <benchmark/benchmark.h>

#include "wsa/miura.hpp"
#include "wsa/suites.hpp"

using namespace wsa;

static void BM_extract_W(benchmark::State& st) {
  Algebra alg(Instance{2, 1, (int)st.range(0)}, Algebra::Type::Amn);
  for (auto _ : st) {
    auto W = extract_W(alg);
    benchmark::DoNotOptimize(W);
  }
}
BENCHMARK(BM_extract_W)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_nth_product_W2(benchmark::State& st) {
  Algebra alg(Instance{2, 1, 2}, Algebra::Type::Amn);
  auto W = extract_W(alg);
  const State& u = W.at(w_key(1, 1, 2));
  const State& v = W.at(w_key(2, 2, 1));
  int n = (int)st.range(0);
  for (auto _ : st) {
    State r = nth_product(u, n, v);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_nth_product_W2)->Arg(0)->Arg(1)->Arg(2);

static void BM_mode_commutator(benchmark::State& st) {
  Algebra alg(Instance{2, 1, 2}, Algebra::Type::Amn);
  auto W = extract_W(alg);
  const State& u = W.at(w_key(1, 1, 2));
  const State& v = W.at(w_key(2, 2, 1));
  for (auto _ : st) {
    auto r = mode_commutator(u, 1, v, -1);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_mode_commutator);

static void BM_d0_apply(benchmark::State& st) {
  Algebra alg(Instance{2, 1, 3}, Algebra::Type::Amn);
  auto W = extract_W(alg);
  const State& w3 = W.at(w_key(3, 1, 1));
  for (auto _ : st) {
    State r = d0_apply(w3);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_d0_apply);

static void BM_basis_words(benchmark::State& st) {
  Algebra alg(Instance{2, 1, 2}, Algebra::Type::Amn);
  for (auto _ : st) {
    auto b = basis_words(alg, (int)st.range(0));
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_basis_words)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
