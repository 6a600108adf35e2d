// Serial reference vs OpenMP kernel for the three hot loops: full-instance
// verification, exhaustive soundness search and the lower-bound colour table.
// The range argument is the worker count for the parallel variants.

#include <benchmark/benchmark.h>

#include "lcert/certification.hpp"
#include "lcert/generators.hpp"
#include "lcert/lowerbound.hpp"
#include "lcert/parallel.hpp"
#include "lcert/schemes.hpp"
#include "lcert/soundness.hpp"

namespace {

using namespace lcert;

struct DenseFixture {
  Instance inst;
  SchemePtr scheme;
  Assignment certs;

  DenseFixture() {
    inst = Instance::unlabeled(gen_dense_random(160, 0.95, 32, 5));
    inst.selected[7] = 1;
    inst = with_sequential_ids(std::move(inst));
    SchemeConfig cfg;
    cfg.name = "dense";
    cfg.id_bit_length = 16;
    scheme = make_scheme(cfg);
    certs = scheme->prove(inst);
  }
};

const DenseFixture& dense() {
  static const DenseFixture f;
  return f;
}

Instance chordal_no_instance() {
  Instance inst = Instance::unlabeled(gen_random_chordal(8, 3, 12));
  inst.selected[0] = inst.selected[7] = 1;
  return inst;
}

void BM_VerifySerial(benchmark::State& state) {
  const auto& f = dense();
  for (auto _ : state) benchmark::DoNotOptimize(serial::run_verifier(*f.scheme, f.inst, f.certs).global);
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto& f = dense();
  set_worker_count(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_verifier(*f.scheme, f.inst, f.certs).global);
  set_worker_count(0);
}

void BM_ExhaustiveSerial(benchmark::State& state) {
  const Instance inst = chordal_no_instance();
  SchemeConfig cfg;
  cfg.name = "chordal";
  const auto scheme = make_scheme(cfg);
  const auto space = SearchSpace::for_scheme(*scheme, inst, scheme->size_bound(SizeContext::of(inst)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::exhaustive_soundness(*scheme, inst, space).tested);
}

void BM_ExhaustiveParallel(benchmark::State& state) {
  const Instance inst = chordal_no_instance();
  SchemeConfig cfg;
  cfg.name = "chordal";
  const auto scheme = make_scheme(cfg);
  const auto space = SearchSpace::for_scheme(*scheme, inst, scheme->size_bound(SizeContext::of(inst)));
  set_worker_count(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_soundness(*scheme, inst, space).tested);
  set_worker_count(0);
}

const FamilyParams kFamily{24, 1, 0, 0, 1};

SchemePtr classic_for_family() {
  SchemeConfig cfg;
  cfg.name = "classic";
  return make_scheme(fit_config_to_family(cfg, make_partition(kFamily), kFamily));
}

void BM_ColorTableSerial(benchmark::State& state) {
  const auto scheme = classic_for_family();
  const IdPartition part = make_partition(kFamily);
  for (auto _ : state) benchmark::DoNotOptimize(serial::build_color_table(*scheme, part, kFamily).cells.size());
}

void BM_ColorTableParallel(benchmark::State& state) {
  const auto scheme = classic_for_family();
  const IdPartition part = make_partition(kFamily);
  set_worker_count(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_color_table(*scheme, part, kFamily).cells.size());
  set_worker_count(0);
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColorTableSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColorTableParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
