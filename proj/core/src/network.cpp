#include "detcap/network.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <utility>

namespace detcap {

DetNetwork::DetNetwork(std::vector<std::string> nodes, const std::string& source,
                       const std::string& dest, const std::vector<Link>& links)
    : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw std::invalid_argument("network: node list is empty");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index.emplace(nodes_[i], i).second) {
      throw std::invalid_argument("network: duplicate node '" + nodes_[i] + "'");
    }
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw std::invalid_argument("network: unknown node '" + name + "'");
    return it->second;
  };

  source_ = lookup(source);
  dest_ = lookup(dest);
  if (source_ == dest_) {
    throw std::invalid_argument("network: source and destination must differ");
  }

  gains_.assign(nodes_.size() * nodes_.size(), 0);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  int max_gain = 0;
  for (const Link& link : links) {
    const std::size_t from = lookup(link.from);
    const std::size_t to = lookup(link.to);
    if (from == to) {
      throw std::invalid_argument("network: self-loop on node '" + link.from + "'");
    }
    if (link.gain < 0) {
      throw std::invalid_argument("network: negative gain on edge " + link.from + " -> " +
                                  link.to);
    }
    if (!seen.emplace(from, to).second) {
      throw std::invalid_argument("network: duplicate edge " + link.from + " -> " + link.to);
    }
    gains_[from * nodes_.size() + to] = link.gain;
    max_gain = std::max(max_gain, link.gain);
  }
  q_ = static_cast<std::size_t>(std::max(max_gain, 1));

  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (i != source_ && i != dest_) relays_.push_back(i);
  }
}

std::size_t DetNetwork::node_index(const std::string& name) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i] == name) return i;
  }
  throw std::invalid_argument("network: unknown node '" + name + "'");
}

int DetNetwork::gain(std::size_t from, std::size_t to) const {
  if (from >= nodes_.size() || to >= nodes_.size()) {
    throw std::out_of_range("network: node index out of range");
  }
  return gains_[from * nodes_.size() + to];
}

std::vector<BitMatrix> transfer_step(const DetNetwork& net,
                                     const std::map<std::size_t, BitMatrix>& transmits) {
  const std::size_t q = net.levels();
  for (const auto& [node, vec] : transmits) {
    if (node >= net.node_count()) {
      throw std::invalid_argument("transfer_step: node index " + std::to_string(node) +
                                  " out of range");
    }
    if (vec.rows() != q || vec.cols() != 1) {
      throw std::invalid_argument("transfer_step: transmit vector for node " +
                                  net.node_name(node) + " must be " + std::to_string(q) + " x 1");
    }
  }

  std::vector<BitMatrix> received(net.node_count(), BitMatrix(q, 1));
  for (const auto& [node, vec] : transmits) {
    for (std::size_t j = 0; j < net.node_count(); ++j) {
      const int n = net.gain(node, j);
      if (n > 0) {
        received[j] = received[j] + shift_matrix(q, q - static_cast<std::size_t>(n)) * vec;
      }
    }
  }
  return received;
}

namespace {

Cut cut_from_mask(const DetNetwork& net, std::uint64_t mask) {
  const auto& relays = net.relay_nodes();
  std::vector<std::size_t> omega{net.source()};
  for (std::size_t t = 0; t < relays.size(); ++t) {
    if ((mask >> t) & 1) omega.push_back(relays[t]);
  }
  std::sort(omega.begin(), omega.end());
  return cut_matrix(net, omega);
}

}  // namespace

Cut cut_matrix(const DetNetwork& net, const std::vector<std::size_t>& omega_in) {
  std::vector<std::size_t> omega = omega_in;
  std::sort(omega.begin(), omega.end());
  if (std::adjacent_find(omega.begin(), omega.end()) != omega.end()) {
    throw std::domain_error("cut: duplicate node in omega");
  }
  for (std::size_t i : omega) {
    if (i >= net.node_count()) {
      throw std::domain_error("cut: node index " + std::to_string(i) + " out of range");
    }
  }
  if (!std::binary_search(omega.begin(), omega.end(), net.source())) {
    throw std::domain_error("cut: omega must contain the source");
  }
  if (std::binary_search(omega.begin(), omega.end(), net.destination())) {
    throw std::domain_error("cut: omega must exclude the destination");
  }

  Cut cut;
  cut.omega = omega;
  for (std::size_t i = 0; i < net.node_count(); ++i) {
    if (!std::binary_search(omega.begin(), omega.end(), i)) cut.omega_c.push_back(i);
  }

  const std::size_t q = net.levels();
  std::vector<std::vector<std::optional<BitMatrix>>> blocks(
      cut.omega_c.size(), std::vector<std::optional<BitMatrix>>(omega.size()));
  for (std::size_t bj = 0; bj < cut.omega_c.size(); ++bj) {
    for (std::size_t bk = 0; bk < omega.size(); ++bk) {
      const int n = net.gain(omega[bk], cut.omega_c[bj]);
      if (n > 0) blocks[bj][bk] = shift_matrix(q, q - static_cast<std::size_t>(n));
    }
  }
  const std::vector<std::size_t> row_dims(cut.omega_c.size(), q);
  const std::vector<std::size_t> col_dims(omega.size(), q);
  cut.matrix = block_assemble(blocks, row_dims, col_dims);
  cut.value = cut.matrix.rank();

  const auto& relays = net.relay_nodes();
  for (std::size_t t = 0; t < relays.size(); ++t) {
    if (std::binary_search(omega.begin(), omega.end(), relays[t])) cut.mask |= 1ULL << t;
  }
  return cut;
}

std::vector<Cut> enumerate_cuts(const DetNetwork& net) {
  const std::size_t relays = net.relay_nodes().size();
  if (relays > kMaxRelayNodes) {
    throw SizeLimitError("cut enumeration covers 2^" + std::to_string(relays) +
                         " subsets; the exhaustive limit is " + std::to_string(kMaxRelayNodes) +
                         " relay nodes");
  }
  std::vector<Cut> cuts;
  cuts.reserve(std::size_t{1} << relays);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << relays); ++mask) {
    cuts.push_back(cut_from_mask(net, mask));
  }
  return cuts;
}

MinCutResult min_cut_capacity(const DetNetwork& net) {
  const std::size_t relays = net.relay_nodes().size();
  if (relays > kMaxRelayNodes) {
    throw SizeLimitError("cut enumeration covers 2^" + std::to_string(relays) +
                         " subsets; the exhaustive limit is " + std::to_string(kMaxRelayNodes) +
                         " relay nodes");
  }
  MinCutResult best;
  bool first = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << relays); ++mask) {
    Cut cut = cut_from_mask(net, mask);
    if (first || cut.value < best.capacity) {
      best.capacity = cut.value;
      best.min_cut = std::move(cut);
      first = false;
    }
  }
  return best;
}

}  // namespace detcap
