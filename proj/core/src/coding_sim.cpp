#include "detcap/coding_sim.hpp"

#include <deque>
#include <optional>

#include "detcap/rng.hpp"

namespace detcap {

namespace {

constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

/// I_copies (Kronecker) block: `copies` diagonal repetitions of `block`.
BitMatrix repeat_diag(std::size_t copies, const BitMatrix& block) {
  std::vector<std::vector<std::optional<BitMatrix>>> grid(
      copies, std::vector<std::optional<BitMatrix>>(copies));
  for (std::size_t i = 0; i < copies; ++i) grid[i][i] = block;
  const std::vector<std::size_t> row_dims(copies, block.rows());
  const std::vector<std::size_t> col_dims(copies, block.cols());
  return block_assemble(grid, row_dims, col_dims);
}

/// Stacked-block channel map from the transmitters `from` to the
/// receivers `to`: block (j, k) is I_K (x) S^(q - n_kj).
BitMatrix layer_channel(const DetNetwork& net, const std::vector<std::size_t>& from,
                        const std::vector<std::size_t>& to, std::size_t block_length) {
  const std::size_t q = net.levels();
  const std::size_t dim = block_length * q;
  std::vector<std::vector<std::optional<BitMatrix>>> grid(
      to.size(), std::vector<std::optional<BitMatrix>>(from.size()));
  for (std::size_t j = 0; j < to.size(); ++j) {
    for (std::size_t k = 0; k < from.size(); ++k) {
      const int n = net.gain(from[k], to[j]);
      if (n > 0) {
        grid[j][k] = repeat_diag(block_length, shift_matrix(q, q - static_cast<std::size_t>(n)));
      }
    }
  }
  const std::vector<std::size_t> row_dims(to.size(), dim);
  const std::vector<std::size_t> col_dims(from.size(), dim);
  return block_assemble(grid, row_dims, col_dims);
}

}  // namespace

LayeredSchedule validate_layered(const DetNetwork& net) {
  const std::size_t n = net.node_count();
  std::vector<std::size_t> depth(n, kUnreached);
  depth[net.source()] = 0;
  std::deque<std::size_t> queue{net.source()};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      if (net.gain(u, v) > 0 && depth[v] == kUnreached) {
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      }
    }
  }

  for (std::size_t v = 0; v < n; ++v) {
    if (depth[v] == kUnreached) {
      throw TopologyError("node " + net.node_name(v) + " is unreachable from the source");
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (net.gain(u, v) > 0 && depth[v] != depth[u] + 1) {
        throw TopologyError("edge " + net.node_name(u) + " -> " + net.node_name(v) +
                            " crosses from layer " + std::to_string(depth[u]) + " to layer " +
                            std::to_string(depth[v]) + "; links must go one layer forward");
      }
    }
  }
  const std::size_t last = depth[net.destination()];
  for (std::size_t v = 0; v < n; ++v) {
    if (v != net.destination() && depth[v] >= last) {
      throw TopologyError("node " + net.node_name(v) +
                          " does not reach the destination's layer boundary; the destination "
                          "must sit alone in the last layer");
    }
  }

  LayeredSchedule sched;
  sched.layers.resize(last + 1);
  for (std::size_t v = 0; v < n; ++v) sched.layers[depth[v]].push_back(v);
  return sched;
}

CodingTrial run_trial(const DetNetwork& net, const LayeredSchedule& sched,
                      std::size_t block_length, std::uint64_t seed) {
  if (block_length == 0) throw std::invalid_argument("run_trial: block length must be >= 1");
  if (net.relay_nodes().size() > kMaxRelayNodes) {
    throw SizeLimitError("run_trial: network exceeds " + std::to_string(kMaxRelayNodes) +
                         " relay nodes");
  }

  const std::size_t dim = block_length * net.levels();
  SplitMix64 seeder(seed);

  // Compose hop by hop: channel into layer 1, then per layer an encoder
  // block-diagonal followed by the next channel hop.
  BitMatrix end_to_end = layer_channel(net, sched.layers[0], sched.layers[1], block_length);
  for (std::size_t layer = 1; layer + 1 < sched.layers.size(); ++layer) {
    const auto& relays = sched.layers[layer];
    std::vector<std::vector<std::optional<BitMatrix>>> grid(
        relays.size(), std::vector<std::optional<BitMatrix>>(relays.size()));
    for (std::size_t i = 0; i < relays.size(); ++i) {
      grid[i][i] = random_bit_matrix(dim, dim, seeder.next());
    }
    const std::vector<std::size_t> dims(relays.size(), dim);
    const BitMatrix encoders = block_assemble(grid, dims, dims);
    end_to_end =
        layer_channel(net, relays, sched.layers[layer + 1], block_length) * encoders * end_to_end;
  }

  return {block_length, seed, end_to_end.rank()};
}

RateEstimate estimate_rate(const DetNetwork& net, const LayeredSchedule& sched,
                           std::size_t block_length, std::size_t trials, std::uint64_t seed0) {
  if (trials == 0) throw std::invalid_argument("estimate_rate: need at least one trial");
  std::size_t best = 0;
  std::size_t total = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const CodingTrial trial = run_trial(net, sched, block_length, seed0 + t);
    best = std::max(best, trial.achieved_rank);
    total += trial.achieved_rank;
  }
  const double k = static_cast<double>(block_length);
  return {static_cast<double>(best) / k,
          static_cast<double>(total) / (static_cast<double>(trials) * k)};
}

}  // namespace detcap
