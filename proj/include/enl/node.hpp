#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace enl {

/// Constructors of the structured node terms used by every catalog family.
/// The parameters a and b are interpreted per kind; unused ones stay zero.
enum class NodeKind : std::uint8_t {
  Path,          // p:a          endless / one-ended path node x_a
  Ladder,        // lad:a        ladder rung node x_a
  Ground,        // lad:g        ladder ground x_g
  Ray,           // ray:a        appended ray node p_a (a >= 1)
  Grid,          // grid:a,b     lattice point (a,b)
  DiamondJ,      // j:a,b        junction J(a,b) of chain a at depth b; x0:a == j:a,0
  DiamondL,      // l:a,b        left diamond node L(a,b)
  DiamondR,      // r:a,b        right diamond node R(a,b)
  OneNode,       // x1:a         1-node with index a
  OneNodeGround, // x1:g         1-node that replaces the ladder ground
  PathSection,   // q:a,b        node b of the endless 0-path between x1:a and x1:a+1
  Rung,          // v:a,b        node b of the endless 0-path replacing rung {x_a, x_g}
  Rail,          // h:a,b        node b of the endless 0-path replacing {x_a, x_a+1}
  Embedded,      // a:a          0-node embedded in the 1-node x1:a
};

struct NodeId {
  NodeKind kind = NodeKind::Path;
  std::int64_t a = 0;
  std::int64_t b = 0;

  constexpr bool operator==(const NodeId&) const = default;

  /// 1-nodes are the nodes of rank 1; everything else is a 0-node.
  constexpr bool is_one_node() const {
    return kind == NodeKind::OneNode || kind == NodeKind::OneNodeGround;
  }

  std::string to_string() const;
  static NodeId parse(std::string_view literal);
};

/// Deterministic tie-break order: kind first, then parameters in the
/// enumeration 0, 1, -1, 2, -2, ... so that non-negative values come first.
std::strong_ordering canonical_order(const NodeId& x, const NodeId& y);

struct CanonicalLess {
  bool operator()(const NodeId& x, const NodeId& y) const { return canonical_order(x, y) < 0; }
};

constexpr NodeId path_node(std::int64_t k) { return {NodeKind::Path, k, 0}; }
constexpr NodeId ladder_node(std::int64_t k) { return {NodeKind::Ladder, k, 0}; }
constexpr NodeId ground_node() { return {NodeKind::Ground, 0, 0}; }
constexpr NodeId ray_node(std::int64_t j) { return {NodeKind::Ray, j, 0}; }
constexpr NodeId grid_node(std::int64_t k, std::int64_t l) { return {NodeKind::Grid, k, l}; }
constexpr NodeId junction(std::int64_t k, std::int64_t d) { return {NodeKind::DiamondJ, k, d}; }
constexpr NodeId diamond_left(std::int64_t k, std::int64_t d) { return {NodeKind::DiamondL, k, d}; }
constexpr NodeId diamond_right(std::int64_t k, std::int64_t d) { return {NodeKind::DiamondR, k, d}; }
constexpr NodeId one_node(std::int64_t k) { return {NodeKind::OneNode, k, 0}; }
constexpr NodeId one_node_ground() { return {NodeKind::OneNodeGround, 0, 0}; }
constexpr NodeId section_node(std::int64_t k, std::int64_t i) { return {NodeKind::PathSection, k, i}; }
constexpr NodeId rung_node(std::int64_t k, std::int64_t i) { return {NodeKind::Rung, k, i}; }
constexpr NodeId rail_node(std::int64_t k, std::int64_t i) { return {NodeKind::Rail, k, i}; }
constexpr NodeId embedded_node(std::int64_t k) { return {NodeKind::Embedded, k, 0}; }

/// Number of integer parameters a kind carries (0, 1 or 2).
int arity(NodeKind kind);
std::string_view kind_prefix(NodeKind kind);

std::ostream& operator<<(std::ostream& os, const NodeId& x);

struct NodeIdHash {
  std::size_t operator()(const NodeId& x) const noexcept {
    std::size_t h = static_cast<std::size_t>(x.kind);
    h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::int64_t>{}(x.a);
    h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::int64_t>{}(x.b);
    return h;
  }
};

}  // namespace enl
