// Serial against OpenMP batch drivers on the reconstruction and recognizer
// workloads.
#include "pbdom/verify.hpp"

#include <benchmark/benchmark.h>

using namespace pbdom;

namespace {

const Corpus& corpus() {
  static const Corpus c = [] {
    VerifyOptions opt;
    opt.max_size = 6;
    return build_corpus(opt);
  }();
  return c;
}

void BM_Reconstruction(benchmark::State& state) {
  const Exec exec = state.range(0) ? Exec::parallel : Exec::serial;
  const Corpus& c = corpus();
  for (auto _ : state) {
    auto r = check_reconstruction(c, exec);
    benchmark::DoNotOptimize(r.failures);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * c.oriented.size()));
  state.SetLabel(exec == Exec::parallel ? "openmp" : "serial");
}

void BM_Recognizers(benchmark::State& state) {
  VerifyOptions opt;
  opt.max_size = 6;
  opt.exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state) {
    auto r = check_recognizer_agreement(opt);
    benchmark::DoNotOptimize(r.failures);
  }
  state.SetLabel(opt.exec == Exec::parallel ? "openmp" : "serial");
}

}  // namespace

BENCHMARK(BM_Reconstruction)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Recognizers)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
