#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "detcap/bit_matrix.hpp"

namespace detcap {

/// A directed link with a nonnegative integer gain: the number of signal
/// levels delivered from `from` to `to`.
struct Link {
  std::string from;
  std::string to;
  int gain = 0;
};

/// Thrown when a network exceeds the exhaustive cut-enumeration limit.
class SizeLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Hard limit on relay (non source/destination) nodes: cut enumeration is
/// exhaustive over 2^relays subsets.
inline constexpr std::size_t kMaxRelayNodes = 22;

/// A wireless network in the binary-expansion model. Each node transmits
/// and receives a GF(2) vector of q signal levels per time step, where q
/// is the largest gain in the network (at least 1). A link of gain n
/// shifts the transmitted vector down by q - n levels, so the receiver
/// sees the transmitter's n most significant levels; vectors arriving at
/// the same node add level-wise modulo 2.
///
/// Immutable after construction.
class DetNetwork {
public:
  /// Node declaration order is significant: it fixes the block order of
  /// cut transfer matrices and the bit order of cut masks.
  DetNetwork(std::vector<std::string> nodes, const std::string& source, const std::string& dest,
             const std::vector<Link>& links);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t levels() const { return q_; }  // q = max gain, min 1
  std::size_t source() const { return source_; }
  std::size_t destination() const { return dest_; }

  const std::string& node_name(std::size_t i) const { return nodes_.at(i); }
  /// Index of a declared node; throws std::invalid_argument if unknown.
  std::size_t node_index(const std::string& name) const;

  int gain(std::size_t from, std::size_t to) const;

  /// Non-terminal node indices in declaration order; position t in this
  /// list is bit t of a cut mask.
  const std::vector<std::size_t>& relay_nodes() const { return relays_; }

private:
  std::vector<std::string> nodes_;
  std::size_t source_ = 0;
  std::size_t dest_ = 0;
  std::vector<int> gains_;  // node_count^2, row-major (from, to)
  std::size_t q_ = 1;
  std::vector<std::size_t> relays_;
};

/// One channel use: y_j = sum over k of S^(q - n_kj) x_k over GF(2).
/// `transmits` maps node index to a q x 1 column; missing nodes transmit
/// zero. Returns the received column for every node.
std::vector<BitMatrix> transfer_step(const DetNetwork& net,
                                     const std::map<std::size_t, BitMatrix>& transmits);

/// A source/destination-separating bipartition with its transfer matrix.
struct Cut {
  std::vector<std::size_t> omega;    // ascending node indices, contains the source
  std::vector<std::size_t> omega_c;  // complement, contains the destination
  BitMatrix matrix;                  // q|omega_c| x q|omega|
  std::size_t value = 0;             // rank of matrix
  std::uint64_t mask = 0;            // relay membership bits (bit t = relay t in omega)
};

/// Transfer matrix from the transmitters in omega to the receivers in its
/// complement: block (j, k) is S^(q - n_kj), with blocks laid out in node
/// declaration order. Throws std::domain_error if omega is not a valid
/// cut side (must contain the source and exclude the destination).
Cut cut_matrix(const DetNetwork& net, const std::vector<std::size_t>& omega);

/// Every valid cut exactly once, in ascending relay-mask order (mask 0 is
/// the cut {source}). Throws SizeLimitError beyond kMaxRelayNodes relays.
std::vector<Cut> enumerate_cuts(const DetNetwork& net);

struct MinCutResult {
  std::size_t capacity = 0;
  Cut min_cut;  // smallest relay mask among minimizing cuts
};

/// Capacity as the minimum cut rank over all cuts, with the minimizing
/// cut (ties broken toward the smallest relay mask).
MinCutResult min_cut_capacity(const DetNetwork& net);

}  // namespace detcap
