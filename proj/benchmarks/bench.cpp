#include <benchmark/benchmark.h>

#include <choicelab/axioms.hpp>
#include <choicelab/game.hpp>
#include <choicelab/manipulation.hpp>
#include <choicelab/solutions.hpp>

namespace {

using namespace choicelab;

std::vector<MarginMatrix> tournaments5() { return enumerate_tournaments(5); }

void BM_MaximinStrategy(benchmark::State& state) {
  const auto ts = tournaments5();
  const AltSet universe = AltSet::full(5);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximin_strategy(ts[i % ts.size()], universe));
    ++i;
  }
}
BENCHMARK(BM_MaximinStrategy);

void BM_MinimalCoveringSet(benchmark::State& state) {
  const auto ts = tournaments5();
  const AltSet universe = AltSet::full(5);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        minimal_covering_set_general(ts[i % ts.size()], universe));
    ++i;
  }
}
BENCHMARK(BM_MinimalCoveringSet);

void BM_SetMonotonicitySweep(benchmark::State& state) {
  const ScfDescriptor& scf = find_scf("topcycle");
  const DomainSpec domain{.n = 2, .m = 3, .mode = RelationMode::StrictLinear};
  for (auto _ : state)
    benchmark::DoNotOptimize(check_set_monotonicity(scf, domain));
}
BENCHMARK(BM_SetMonotonicitySweep);

void BM_GroupManipulationSearch(benchmark::State& state) {
  const ScfDescriptor& scf = find_scf("bp");
  const Profile profile = theorem1_profile(3);
  const ModeFlags flags{.pref = PrefExtension::Weak,
                        .misreport = MisreportClass::IndifferencePreserving,
                        .require_outcome_change = true,
                        .max_group_size = 1};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        find_manipulation(scf, profile, profile.universe(), flags));
}
BENCHMARK(BM_GroupManipulationSearch);

}  // namespace

BENCHMARK_MAIN();
