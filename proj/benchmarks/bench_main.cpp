#include <benchmark/benchmark.h>

#include "permcheck/catalog.hpp"
#include "permcheck/classify.hpp"
#include "permcheck/survey.hpp"

using namespace permcheck;

static void BM_ClosureA5(benchmark::State& state) {
  GroupSpec spec = spec_alternating(5);
  for (auto _ : state) {
    GroupTable g = build(spec);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_ClosureA5);

static void BM_LatticeA5(benchmark::State& state) {
  GroupTable g = build(spec_alternating(5));
  for (auto _ : state) {
    Lattice lat = all_subgroups(g);
    benchmark::DoNotOptimize(lat.size());
  }
}
BENCHMARK(BM_LatticeA5);

static void BM_Sqn4SweepD12(benchmark::State& state) {
  GroupTable g = build(spec_dihedral(12));
  Lattice lat = all_subgroups(g);
  for (auto _ : state) {
    int holds = 0;
    for (int i = 0; i < lat.size(); ++i)
      holds += is_sqn4(g, lat.subgroup(i), lat).holds;
    benchmark::DoNotOptimize(holds);
  }
}
BENCHMARK(BM_Sqn4SweepD12);

static void BM_ClassifyS4(benchmark::State& state) {
  GroupTable g = build(spec_symmetric(4));
  for (auto _ : state) {
    ClassificationReport r = classify(g, "S4");
    benchmark::DoNotOptimize(r.sq4t);
  }
}
BENCHMARK(BM_ClassifyS4);

static void BM_ClassifyA5(benchmark::State& state) {
  GroupTable g = build(spec_alternating(5));
  for (auto _ : state) {
    ClassificationReport r = classify(g, "A5");
    benchmark::DoNotOptimize(r.sq4t);
  }
}
BENCHMARK(BM_ClassifyA5);

static void BM_SurveyCorpus16(benchmark::State& state) {
  SurveyOptions opts;
  opts.max_order = 16;
  opts.jobs = 1;
  for (auto _ : state) {
    SurveyResult r = run_survey(opts);
    benchmark::DoNotOptimize(r.violations.size());
  }
}
BENCHMARK(BM_SurveyCorpus16);

BENCHMARK_MAIN();
