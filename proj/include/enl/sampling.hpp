#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "enl/hypernode.hpp"

namespace enl {

using Rng = std::mt19937_64;

/// Parameter domain of a node kind within a graph: arity and lower bounds.
struct KindDomain {
  NodeKind kind;
  std::optional<std::int64_t> a_min;
  std::optional<std::int64_t> b_min;
};

/// Kinds of the maximal nodes of the graph.
std::vector<KindDomain> maximal_kinds(const GraphRef& g);

/// A member node with parameters of magnitude at most `radius`.
NodeId random_node(const GraphRef& g, Rng& rng, std::int64_t radius);

/// const, affine, parity or explicit-prefix sequences whose values stay >= lo when set.
IndexSequence random_sequence(Rng& rng, std::optional<std::int64_t> lo);

/// A maximal hypernode with a decidable symbolic class.
Hypernode random_hypernode(const GraphRef& g, Rng& rng);

/// Changes `count` entries of the representative (below the horizon) to other member nodes.
Hypernode perturb(const Hypernode& x, Rng& rng, std::size_t count, std::uint64_t horizon = 64);

}  // namespace enl
