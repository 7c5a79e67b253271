#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rrlearn/alternations.hpp"
#include "rrlearn/global_margin.hpp"
#include "rrlearn/interval_mass.hpp"
#include "rrlearn/local_margin.hpp"
#include "rrlearn/minplus.hpp"

namespace {

using rrl::BigRat;
using rrl::LabeledDataset;
using rrl::LabeledPoint;

LabeledDataset random_line(int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<LabeledPoint> pts;
  for (int i = 0; i < n; ++i) {
    LabeledPoint p;
    p.x.push_back(BigRat(static_cast<int>(rng() % 100000), 1 + static_cast<int>(rng() % 4)));
    p.label = static_cast<int>(rng() % 2);
    pts.push_back(std::move(p));
  }
  return LabeledDataset(1, {"+", "-"}, std::move(pts));
}

LabeledDataset random_grid(int n, int d, int span, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<LabeledPoint> pts;
  for (int i = 0; i < n; ++i) {
    LabeledPoint p;
    for (int k = 0; k < d; ++k)
      p.x.push_back(BigRat(static_cast<int>(rng() % static_cast<unsigned>(span))));
    p.label = static_cast<int>(rng() % 2);
    pts.push_back(std::move(p));
  }
  return LabeledDataset(d, {"+", "-"}, std::move(pts));
}

rrl::CostSequence random_costs(int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  rrl::CostSequence s(static_cast<std::size_t>(n));
  rrl::Cost level = 0;
  for (int i = n - 1; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = level;
    level += static_cast<rrl::Cost>(rng() % 3);
  }
  return s;
}

void BM_AlternationsTrainFull(benchmark::State& state) {
  auto data = random_line(static_cast<int>(state.range(0)), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(rrl::AlternationModel::train(data));
}
BENCHMARK(BM_AlternationsTrainFull)->Arg(64)->Arg(256)->Arg(1024);

void BM_AlternationsTrainCapped(benchmark::State& state) {
  auto data = random_line(static_cast<int>(state.range(0)), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(rrl::AlternationModel::train(data, 8));
}
BENCHMARK(BM_AlternationsTrainCapped)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_AlternationsCertify(benchmark::State& state) {
  auto data = random_line(static_cast<int>(state.range(0)), 3);
  auto model = rrl::AlternationModel::train(data, 16);
  BigRat x(314159, 10);
  for (auto _ : state)
    benchmark::DoNotOptimize(model.certify(x, 8));
}
BENCHMARK(BM_AlternationsCertify)->Arg(256)->Arg(4096);

void BM_AlternationsAllBudgets(benchmark::State& state) {
  auto data = random_line(1024, 4);
  auto model = rrl::AlternationModel::train(data, static_cast<int>(state.range(0)));
  BigRat x(314159, 10);
  for (auto _ : state)
    benchmark::DoNotOptimize(model.certify_all_budgets(x, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AlternationsAllBudgets)->Arg(16)->Arg(64);

void BM_MinPlusNaive(benchmark::State& state) {
  auto a = random_costs(static_cast<int>(state.range(0)), 5);
  auto b = random_costs(static_cast<int>(state.range(0)), 6);
  for (auto _ : state)
    benchmark::DoNotOptimize(rrl::minplus_naive(a, b));
}
BENCHMARK(BM_MinPlusNaive)->Arg(256)->Arg(1024)->Arg(4096);

void BM_MinPlusReduction(benchmark::State& state) {
  auto a = random_costs(static_cast<int>(state.range(0)), 5);
  auto b = random_costs(static_cast<int>(state.range(0)), 6);
  for (auto _ : state)
    benchmark::DoNotOptimize(rrl::minplus_monotone_decreasing(a, b));
}
BENCHMARK(BM_MinPlusReduction)->Arg(256)->Arg(1024)->Arg(4096);

void BM_LocalMarginCertify(benchmark::State& state) {
  auto data = random_grid(static_cast<int>(state.range(0)), 3, 1000, 7);
  auto model = rrl::MarginModel::train(data, rrl::Metric::L2);
  std::vector<BigRat> x = {BigRat(500), BigRat(250), BigRat(750)};
  for (auto _ : state)
    benchmark::DoNotOptimize(model.certify(x, 8));
}
BENCHMARK(BM_LocalMarginCertify)->Arg(512)->Arg(4096);

void BM_GlobalMarginTrain(benchmark::State& state) {
  auto data = random_grid(static_cast<int>(state.range(0)), 2, 32, 8);
  for (auto _ : state)
    benchmark::DoNotOptimize(rrl::GraphLadder::train(data, 4, rrl::Metric::L2));
}
BENCHMARK(BM_GlobalMarginTrain)->Arg(16)->Arg(48);

void BM_GlobalMarginCertify(benchmark::State& state) {
  auto data = random_grid(48, 2, 32, 9);
  auto ladder = rrl::GraphLadder::train(data, 4, rrl::Metric::L2);
  std::vector<BigRat> x = {BigRat(11), BigRat(17)};
  for (auto _ : state)
    benchmark::DoNotOptimize(ladder.certify(data, x, 4));
}
BENCHMARK(BM_GlobalMarginCertify);

void BM_IntervalMassTrain(benchmark::State& state) {
  auto data = random_line(static_cast<int>(state.range(0)), 10);
  for (auto _ : state)
    benchmark::DoNotOptimize(rrl::IntervalMassModel::train(data));
}
BENCHMARK(BM_IntervalMassTrain)->Arg(16)->Arg(32)->Arg(64);

void BM_IntervalMassCertify(benchmark::State& state) {
  auto data = random_line(64, 11);
  auto model = rrl::IntervalMassModel::train(data);
  BigRat x(777, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(model.certify(x, 3));
}
BENCHMARK(BM_IntervalMassCertify);

}  // namespace

BENCHMARK_MAIN();
