#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "enl/node.hpp"
#include "enl/one_graph.hpp"
#include "enl/ordinal.hpp"

namespace enl {

struct Truncation {
  std::int64_t lo = 0;      // least section / 1-node index kept
  std::int64_t hi = 6;      // greatest section index kept (1-nodes up to hi + 1)
  std::int64_t depth = 8;   // in-section parameter range kept
  std::uint64_t max_tau1 = 3;
  std::uint64_t max_tau0 = 12;
};

/// Nodes of the finite truncated model.
std::vector<NodeId> truncated_nodes(const OneGraph& g, const Truncation& t);

/// Least walk length over walks assembled from primitive moves in the
/// truncated model: a branch (length 1), a one-ended run from a 0-node out
/// along a tip of its section into the 1-node holding that tip (length w), the
/// same run in reverse, and the zero-length passage between a 1-node and its
/// embedded 0-node. Lengths beyond the tau bounds are not explored; nullopt
/// then means no walk within the bounds.
std::optional<Ordinal> enumerate_walk_distance(const OneGraph& g, const NodeId& x, const NodeId& y,
                                               const Truncation& t);

}  // namespace enl
