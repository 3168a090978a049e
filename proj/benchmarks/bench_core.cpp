#include "itm/experiment.hpp"
#include "itm/map.hpp"
#include "itm/reduction.hpp"
#include "itm/return_map.hpp"
#include "itm/typing.hpp"

#include <benchmark/benchmark.h>

namespace {

itm::Map t0() {
  return itm::Map({itm::Rational(1, 3), itm::Rational(2, 3)},
                  {itm::Rational(1, 2), itm::Rational(-1, 4),
                   itm::Rational(-1, 2)});
}

itm::Map golden_b1() {
  return itm::Map({itm::Rational(13, 64), itm::Rational(46, 64)},
                  {itm::Rational(51, 64), itm::Rational(5, 64),
                   itm::Rational(-46, 64)});
}

void bm_image(benchmark::State& state) {
  const itm::Map map = t0();
  const itm::IntervalSet unit = itm::IntervalSet::unit();
  for (auto _ : state) {
    benchmark::DoNotOptimize(map.image(unit));
  }
}
BENCHMARK(bm_image);

void bm_detect_type(benchmark::State& state) {
  const itm::Map map = t0();
  for (auto _ : state) {
    benchmark::DoNotOptimize(itm::detect_type(map));
  }
}
BENCHMARK(bm_detect_type);

void bm_fit(benchmark::State& state) {
  const itm::Map map = golden_b1();
  for (auto _ : state) {
    benchmark::DoNotOptimize(itm::fit(map));
  }
}
BENCHMARK(bm_fit);

void bm_reduce_pipeline(benchmark::State& state) {
  const itm::Map map = golden_b1();
  for (auto _ : state) {
    benchmark::DoNotOptimize(itm::reduce_pipeline(map));
  }
}
BENCHMARK(bm_reduce_pipeline);

void bm_first_return(benchmark::State& state) {
  const itm::Map map = golden_b1();
  const itm::Interval base(itm::Rational(13, 64), itm::Rational(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(itm::first_return_map(map, base));
  }
}
BENCHMARK(bm_first_return);

void bm_sample_trial(benchmark::State& state) {
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(itm::sample_map3(7, static_cast<long long>(trial++), 64));
  }
}
BENCHMARK(bm_sample_trial);

}  // namespace

BENCHMARK_MAIN();
