#include <benchmark/benchmark.h>

#include <random>

#include "basewright/actions.hpp"
#include "basewright/audit.hpp"
#include "basewright/tables.hpp"

using namespace bw;

static void BM_FieldMul(benchmark::State& state) {
  const Field& F = Field::gf(int(state.range(0)));
  std::mt19937 rng(1);
  std::vector<elt> xs(1024);
  for (auto& x : xs) x = elt(rng() % F.order());
  for (auto _ : state) {
    elt acc = 1;
    for (elt x : xs) acc = F.add(F.mul(acc, x), x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(9)->Arg(16);

static void BM_Rref(benchmark::State& state) {
  const Field& F = Field::gf(3);
  std::mt19937 rng(2);
  int d = int(state.range(0));
  std::vector<Vec> rows(d / 2, Vec(d));
  for (auto& r : rows)
    for (auto& c : r) c = elt(rng() % 3);
  for (auto _ : state) benchmark::DoNotOptimize(rref(F, rows, d));
}
BENCHMARK(BM_Rref)->Arg(6)->Arg(10);

static void BM_OrbitEnumeration(benchmark::State& state) {
  auto spec = state.range(0) == 0 ? ActionSpec::singular(Family::Sp, 6, 3, 1)
                                  : ActionSpec::singular(Family::GOplus, 8, 2, 2);
  acting_group(spec);
  for (auto _ : state) {
    Orbit O = enumerate_orbit(spec);
    benchmark::DoNotOptimize(O.degree());
  }
  state.SetLabel(spec.describe());
}
BENCHMARK(BM_OrbitEnumeration)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_SchreierSims(benchmark::State& state) {
  PermGroup P = load_permgroup(state.range(0) == 0 ? "M12" : "M24");
  for (auto _ : state) benchmark::DoNotOptimize(schreier_sims(P).order());
  state.SetLabel(P.name);
}
BENCHMARK(BM_SchreierSims)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ExactMinBase(benchmark::State& state) {
  Orbit O = enumerate_orbit(state.range(0) == 0 ? ActionSpec::coset(3, 2, Sign::Minus)
                                                : ActionSpec::nonsingular1(Family::GOplus, 8, 2));
  StabChain C = schreier_sims(O.perms);
  for (auto _ : state) benchmark::DoNotOptimize(exact_min_base(C).size);
  state.SetLabel(O.spec.describe());
}
BENCHMARK(BM_ExactMinBase)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_VerifyTable(benchmark::State& state) {
  const char* method = state.range(0) == 0 ? "orbit" : "commutant";
  verify_table("2", Family::Sp, 8, 2, Sign::None, method);
  for (auto _ : state) benchmark::DoNotOptimize(verify_table("2", Family::Sp, 8, 2, Sign::None, method).pass);
  state.SetLabel(method);
}
BENCHMARK(BM_VerifyTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Witness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(witness_trials(Family::GOplus, 8, 2, 10, 1).failures);
}
BENCHMARK(BM_Witness)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
