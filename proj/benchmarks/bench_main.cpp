#include <benchmark/benchmark.h>

#include "pgog/amalgam.hpp"
#include "pgog/analysis.hpp"
#include "pgog/closure.hpp"
#include "pgog/coset_enumeration.hpp"
#include "pgog/models.hpp"
#include "pgog/presentation.hpp"
#include "pgog/separation.hpp"
#include "pgog/tower.hpp"

namespace {

using namespace pgog;

void BM_ClosureG(benchmark::State& state) {
  ModelPtr g = make_g(2, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(closure_order(*g));
}
BENCHMARK(BM_ClosureG)->Arg(1)->Arg(2)->Arg(3);

void BM_CosetEnumerateHeisenberg(benchmark::State& state) {
  ModelPtr h = make_heisenberg(static_cast<std::uint32_t>(state.range(0)));
  FinitePresentation pres = *h->presentation();
  for (auto _ : state) benchmark::DoNotOptimize(coset_enumerate(pres).index());
}
BENCHMARK(BM_CosetEnumerateHeisenberg)->Arg(2)->Arg(3)->Arg(5);

void BM_DetectCollapseChain(benchmark::State& state) {
  FinitePresentation fp = fundamental_presentation(heisenberg_chain(2, static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(detect_collapse(fp, 2).residual_rank);
}
BENCHMARK(BM_DetectCollapseChain)->Arg(2)->Arg(5)->Arg(10);

void BM_NormalFormP2(benchmark::State& state) {
  GraphOfGroups P = build_p(2, 2);
  FinitePresentation fp = fundamental_presentation(P);
  PathAmalgam am{P};
  Word w = fp.word("G1.z G2.k2 G1.k1 G2.h2 G1.z^-1 G2.k2^-1");
  for (auto _ : state) benchmark::DoNotOptimize(am.normal_form(w, fp).syllables());
}
BENCHMARK(BM_NormalFormP2);

void BM_Separate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(separate("G3.k3 L.t^2 G1.z L.t^-2", 2, 1, 4).outcome);
  }
}
BENCHMARK(BM_Separate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
