#include <bkr/decision.hpp>
#include <bkr/random_instances.hpp>
#include <bkr/sign_determination.hpp>

#include <benchmark/benchmark.h>

namespace {

struct Instance {
  bkr::Poly p;
  std::vector<bkr::Poly> qs;
};

Instance make_instance(std::size_t n) {
  bkr::Rng rng(1234 + n);
  const auto rp = bkr::random_rooted_poly(rng, 8, 20, 5);
  Instance inst{rp.poly, {}};
  for (std::size_t i = 0; i < n; ++i) inst.qs.push_back(bkr::random_poly_avoiding(rng, rp.roots, 4, 20, 5));
  return inst;
}

std::vector<bkr::Poly> linear_factors(std::size_t n) {
  std::vector<bkr::Poly> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(bkr::Poly::linear_factor(bkr::Rational(static_cast<long>(i))));
  return out;
}

void at_roots(benchmark::State& state, bool naive, bkr::Exec exec) {
  const Instance inst = make_instance(static_cast<std::size_t>(state.range(0)));
  bkr::SignDetOptions opts;
  opts.exec = exec;
  std::uint64_t queries = 0;
  for (auto _ : state) {
    bkr::QueryStats stats;
    auto r = naive ? bkr::naive_find_consistent_signs_at_roots(inst.p, inst.qs, stats, opts)
                   : bkr::find_consistent_signs_at_roots(inst.p, inst.qs, stats, opts);
    benchmark::DoNotOptimize(r);
    queries = stats.tarski_query_count;
  }
  state.counters["queries"] = static_cast<double>(queries);
}

void pipeline(benchmark::State& state, bkr::Method method, bkr::Exec exec) {
  const auto polys = linear_factors(static_cast<std::size_t>(state.range(0)));
  std::uint64_t queries = 0;
  for (auto _ : state) {
    auto r = bkr::find_consistent_signs(polys, {method, exec});
    queries = r.stats.tarski_query_count;
    benchmark::DoNotOptimize(r);
  }
  state.counters["queries"] = static_cast<double>(queries);
}

void BM_AtRootsBkrSerial(benchmark::State& s) { at_roots(s, false, bkr::Exec::Serial); }
void BM_AtRootsBkrParallel(benchmark::State& s) { at_roots(s, false, bkr::Exec::Parallel); }
void BM_AtRootsNaiveSerial(benchmark::State& s) { at_roots(s, true, bkr::Exec::Serial); }
void BM_AtRootsNaiveParallel(benchmark::State& s) { at_roots(s, true, bkr::Exec::Parallel); }
void BM_PipelineBkrSerial(benchmark::State& s) { pipeline(s, bkr::Method::Bkr, bkr::Exec::Serial); }
void BM_PipelineBkrParallel(benchmark::State& s) { pipeline(s, bkr::Method::Bkr, bkr::Exec::Parallel); }
void BM_PipelineNaiveSerial(benchmark::State& s) { pipeline(s, bkr::Method::Naive, bkr::Exec::Serial); }

}  // namespace

BENCHMARK(BM_AtRootsBkrSerial)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AtRootsBkrParallel)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AtRootsNaiveSerial)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AtRootsNaiveParallel)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PipelineBkrSerial)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PipelineBkrParallel)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PipelineNaiveSerial)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
