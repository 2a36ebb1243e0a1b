#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "detcap/network.hpp"

namespace detcap {

/// Thrown when a network is not layered (skip edges, backward edges,
/// unreachable nodes, or nodes sharing the destination's layer).
class TopologyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Nodes grouped by BFS depth from the source: layer 0 is the source
/// alone, the last layer the destination alone, and every positive-gain
/// link goes from one layer to the next.
struct LayeredSchedule {
  std::vector<std::vector<std::size_t>> layers;
};

/// Computes the layer partition or throws TopologyError naming the
/// offending edge or node.
LayeredSchedule validate_layered(const DetNetwork& net);

struct CodingTrial {
  std::size_t block_length = 0;  // channel uses coded jointly (K)
  std::uint64_t seed = 0;
  std::size_t achieved_rank = 0;  // rank of the end-to-end map, at most K * capacity
};

/// One random-coding trial: the source feeds GF(2)^(K q) through the
/// layered channel; every relay applies an independent uniform K q x K q
/// matrix to its stacked block of K received vectors; the achieved rank
/// is the rank of the end-to-end source-to-destination map. Relay
/// matrices are seeded from SplitMix64(seed) in layer order, so results
/// are reproducible.
CodingTrial run_trial(const DetNetwork& net, const LayeredSchedule& sched, std::size_t block_length,
                      std::uint64_t seed);

struct RateEstimate {
  double best_rate = 0.0;
  double mean_rate = 0.0;
};

/// Best and mean of achieved_rank / K over trials with seeds
/// seed0 .. seed0 + trials - 1.
RateEstimate estimate_rate(const DetNetwork& net, const LayeredSchedule& sched,
                           std::size_t block_length, std::size_t trials, std::uint64_t seed0);

}  // namespace detcap
