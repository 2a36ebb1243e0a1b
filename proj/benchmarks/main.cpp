#include <benchmark/benchmark.h>

#include <cmath>

#include "detcap/bit_matrix.hpp"
#include "detcap/coding_sim.hpp"
#include "detcap/diamond_network.hpp"
#include "detcap/network.hpp"
#include "detcap/relay_channel.hpp"

namespace {

void Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const detcap::BitMatrix m = detcap::random_bit_matrix(n, n, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.rank());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(Rank)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void MatMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const detcap::BitMatrix a = detcap::random_bit_matrix(n, n, 1);
  const detcap::BitMatrix b = detcap::random_bit_matrix(n, n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(MatMul)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

void MinCut(benchmark::State& state) {
  const int relays = static_cast<int>(state.range(0));
  std::vector<std::string> nodes{"S", "D"};
  std::vector<detcap::Link> links;
  for (int i = 0; i < relays; ++i) {
    const std::string r = "R" + std::to_string(i);
    nodes.push_back(r);
    links.push_back({"S", r, 3 + i % 3});
    links.push_back({r, "D", 2 + i % 4});
    if (i > 0) links.push_back({"R" + std::to_string(i - 1), r, 1 + i % 2});
  }
  const detcap::DetNetwork net(nodes, "S", "D", links);
  for (auto _ : state) {
    benchmark::DoNotOptimize(detcap::min_cut_capacity(net));
  }
}
BENCHMARK(MinCut)->DenseRange(4, 12, 4);

void RelayCutsetBound(benchmark::State& state) {
  const detcap::GaussianRelay ch{1.0, 316.0, 28.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(detcap::relay_cutset_bound(ch));
  }
}
BENCHMARK(RelayCutsetBound);

void RelaySweepRow(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(detcap::relay_gap_sweep(0.0, -20.0, 60.0, 10.0));
  }
}
BENCHMARK(RelaySweepRow);

void DiamondPdfRate(benchmark::State& state) {
  const detcap::GaussianDiamond ch(45.0, 3.2, 11.0, 90.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(detcap::diamond_pdf_rate(ch));
  }
}
BENCHMARK(DiamondPdfRate);

void CodingTrial(benchmark::State& state) {
  const detcap::DetNetwork net({"S", "A1", "A2", "D"}, "S", "D",
                               {{"S", "A1", 4}, {"S", "A2", 2}, {"A1", "D", 1}, {"A2", "D", 3}});
  const detcap::LayeredSchedule sched = detcap::validate_layered(net);
  const auto k = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(detcap::run_trial(net, sched, k, ++seed));
  }
}
BENCHMARK(CodingTrial)->RangeMultiplier(2)->Range(2, 16);

}  // namespace

int main(int argc, char** argv) {
  ::benchmark::Initialize(&argc, argv);
  if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  ::benchmark::RunSpecifiedBenchmarks();
  ::benchmark::Shutdown();
  return 0;
}
