#include <benchmark/benchmark.h>

#include "mlfw/finite_group.hpp"
#include "mlfw/lie.hpp"
#include "mlfw/lubin_tate.hpp"
#include "mlfw/padic.hpp"
#include "mlfw/symplectic.hpp"
#include "mlfw/trace_kernel.hpp"
#include "mlfw/word.hpp"

using namespace mlfw;

static void BM_QuotientClosure(benchmark::State& st) {
  const int g = static_cast<int>(st.range(0));
  const auto m = static_cast<std::uint32_t>(st.range(1));
  const auto gens = surface_twist_matrices(g);
  for (auto _ : st) benchmark::DoNotOptimize(generate_quotient(gens, m).size());
}
BENCHMARK(BM_QuotientClosure)->Args({1, 3})->Args({2, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

static void BM_DeltaFixing(benchmark::State& st) {
  const PresentationSpec spec(static_cast<int>(st.range(0)));
  const auto fam = twist_family(spec);
  for (auto _ : st)
    for (const auto& e : fam) benchmark::DoNotOptimize(fixes_delta(e.map, spec));
}
BENCHMARK(BM_DeltaFixing)->DenseRange(3, 9, 2);

static void BM_LubinTateLaw(benchmark::State& st) {
  const auto p = static_cast<std::uint32_t>(st.range(0));
  const int f = static_cast<int>(st.range(1));
  const int D = static_cast<int>(st.range(2));
  const CoefficientRing ring(p, f, 8);
  for (auto _ : st) {
    auto law = lubin_tate_law(ring, ring.from_integer(p), ring.residue_field_size(), D);
    benchmark::DoNotOptimize(law.law.terms());
  }
}
BENCHMARK(BM_LubinTateLaw)->Args({5, 1, 12})->Args({3, 2, 12})->Unit(benchmark::kMillisecond);

static void BM_LubinTateChecks(benchmark::State& st) {
  const CoefficientRing ring(5, 1, 8);
  const auto law = lubin_tate_law(ring, ring.from_integer(5), 5, 12);
  for (auto _ : st) benchmark::DoNotOptimize(check_law(law).size());
}
BENCHMARK(BM_LubinTateChecks)->Unit(benchmark::kMillisecond);

static void BM_Automorphisms(benchmark::State& st) {
  const auto g = st.range(0) == 0 ? alternating_group(4) : symmetric_group(4);
  for (auto _ : st) benchmark::DoNotOptimize(automorphisms(g).size());
}
BENCHMARK(BM_Automorphisms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_LieDimension(benchmark::State& st) {
  const auto gens = surface_twist_matrices(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(lie_dimension_lower_bound(gens, 3, 16).dimension);
}
BENCHMARK(BM_LieDimension)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_PadicLog(benchmark::State& st) {
  const auto u = PadicScalar::from_integer(5, 6, st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(padic_log(u));
}
BENCHMARK(BM_PadicLog)->Arg(16)->Arg(64)->Arg(200);

static void BM_InvariantHyperplanes(benchmark::State& st) {
  const TwistFamily fam(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(invariant_hyperplanes(fam).size());
}
BENCHMARK(BM_InvariantHyperplanes)->Arg(9)->Arg(16);
BENCHMARK_MAIN();
