#include <benchmark/benchmark.h>

#include "relfix/certifier.hpp"
#include "relfix/contraction.hpp"
#include "relfix/instance.hpp"
#include "relfix/oracle.hpp"
#include "relfix/solver.hpp"

namespace {

using namespace relfix;

oracle::GeneratedInstance instance_of_size(int n) {
  oracle::InstanceGeneratorConfig config;
  config.carrier_size = n;
  config.seed = 20240915 + n;
  return oracle::random_instance(config);
}

void BM_RandomInstance(benchmark::State& state) {
  oracle::InstanceGeneratorConfig config;
  config.carrier_size = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    config.seed = seed++;
    benchmark::DoNotOptimize(oracle::random_instance(config));
  }
}
BENCHMARK(BM_RandomInstance)->Arg(4)->Arg(8);

void BM_ContractionScan(benchmark::State& state) {
  oracle::GeneratedInstance instance = instance_of_size(static_cast<int>(state.range(0)));
  ContractionCondition cond;
  cond.variant = Variant::MType;
  cond.phi = ComparisonFunction::linear(instance.phi_k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_contraction(cond, instance.pair, instance.space, instance.space.relation));
  }
}
BENCHMARK(BM_ContractionScan)->Arg(4)->Arg(8);

void BM_BruteForceProfile(benchmark::State& state) {
  oracle::GeneratedInstance instance = instance_of_size(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::brute_force_solutions(instance.pair, instance.space));
  }
}
BENCHMARK(BM_BruteForceProfile);

void BM_CheckTheoremFinite(benchmark::State& state) {
  oracle::GeneratedInstance instance = instance_of_size(6);
  RelationalSpace space{instance.space};
  MappingPair pair{instance.pair};
  ContractionCondition cond;
  cond.variant = Variant::MType;
  cond.phi = ComparisonFunction::linear(instance.phi_k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_theorem(TheoremId::Th1, space, pair, cond));
  }
}
BENCHMARK(BM_CheckTheoremFinite);

void BM_CheckTheoremWorkedExample(benchmark::State& state) {
  Instance instance = parse_instance(bundled_instance("example_5_2"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_theorem(TheoremId::Th1, instance.space, instance.pair,
                                           instance.condition, instance.asserted));
  }
}
BENCHMARK(BM_CheckTheoremWorkedExample);

void BM_SolverTrace(benchmark::State& state) {
  Instance instance = parse_instance(bundled_instance("example_5_1"));
  const auto& space = instance.space.computable();
  const auto& pair = instance.pair.computable();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        picard_jungck(space, pair, Point::val(Rat(3)), SolverConfig{}));
  }
}
BENCHMARK(BM_SolverTrace);

}  // namespace

BENCHMARK_MAIN();
