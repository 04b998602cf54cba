#pragma once

#include <string_view>

#include "enl/node.hpp"

namespace enl {

/// Catalog of conventional (rank-0) infinite graphs.
enum class Family { EndlessPath, OneEndedPath, Ladder, LadderWithRay, Grid2D, PerturbedGrid };

/// Catalog of 1-graphs.
enum class OneFamily {
  OnePathOfEndlessPaths,        // endless 1-path, an endless 0-path between consecutive 1-nodes
  LadderOfEndlessPaths,         // grounded ladder, every branch replaced by an endless 0-path
  PartialLadderOfEndlessPaths,  // only the rails replaced; rungs to the ground kept as branches
  DiamondChain,                 // chains of diamonds joined through 1-nodes
};

std::string_view name(Family f);
std::string_view name(OneFamily f);
Family parse_family(std::string_view s);
OneFamily parse_one_family(std::string_view s);
bool is_family_name(std::string_view s);
bool is_one_family_name(std::string_view s);

/// Structural membership of a node term in a family (parameter domains only).
bool is_member(Family f, const NodeId& x);
bool is_member(OneFamily f, const NodeId& x);

/// Canonical standard anchor used for principal-galaxy tests.
NodeId anchor(Family f);
NodeId anchor(OneFamily f);

}  // namespace enl
