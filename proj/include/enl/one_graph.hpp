#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enl/family.hpp"
#include "enl/node.hpp"
#include "enl/ordinal.hpp"

namespace enl {

enum class SectionKind : std::uint8_t {
  Chain,    // diamond chain C_k
  Segment,  // endless 0-path between x1:k and x1:k+1
  Rung,     // endless 0-path replacing rung {x_k, x_g}
  Rail,     // endless 0-path replacing {x_k, x_k+1}
  Star,     // the unaltered rungs of the partial ladder, all meeting at x_g
};

struct SectionId {
  SectionKind kind = SectionKind::Chain;
  std::int64_t index = 0;
  bool operator==(const SectionId&) const = default;
  std::string to_string() const;
};

/// Deterministic order used for witness tie-breaks.
bool section_less(const SectionId& s, const SectionId& t);

enum class TipRay : std::uint8_t {
  Left,      // diamond chain, through the L nodes
  Right,     // diamond chain, through the R nodes
  Backward,  // endless path, parameter decreasing
  Forward,   // endless path, parameter increasing
};

struct TipId {
  SectionId section;
  TipRay ray = TipRay::Left;
  bool operator==(const TipId&) const = default;
  std::string to_string() const;
};

/// One step of a walk summary: from one quotient vertex to the next through a section.
struct WalkStep {
  NodeId from;
  NodeId to;
  SectionId section;
  Ordinal length;
};

struct WalkResult {
  Ordinal length;
  std::vector<WalkStep> witness;
};

enum class Verdict { Pass, Fail, Inapplicable };
std::string to_string(Verdict v);

struct SeparationCheck {
  Verdict verdict = Verdict::Inapplicable;
  std::optional<Ordinal> distance;
  std::string reason;
};

/// A 1-graph {X0, B, X1} from the catalog. Immutable.
class OneGraph {
 public:
  static OneGraph make(OneFamily family);

  OneFamily family() const { return family_; }

  bool contains(const NodeId& x) const { return is_member(family_, x); }
  /// Only the 0-nodes embedded in 1-nodes are nonmaximal.
  bool is_maximal(const NodeId& x) const;
  /// The 1-node holding a nonmaximal 0-node; maximal nodes map to themselves.
  NodeId promote(const NodeId& x) const;

  // 0-graph adjacency over the 0-nodes.
  bool zero_degree_finite(const NodeId& x) const;
  std::vector<NodeId> zero_neighbors(const NodeId& x) const;

  SectionId section_of(const NodeId& zero_node) const;
  bool in_section(const SectionId& s, const NodeId& zero_node) const;
  /// Sections indexed 0, 1, 2, ... (Segment sections enumerate 0, 1, -1, 2, -2, ...).
  SectionId section(std::uint64_t n) const;
  /// Finite in-section 0-distance between two 0-nodes of section s.
  std::uint64_t section_distance(const SectionId& s, const NodeId& x, const NodeId& y) const;

  /// The 1-node that the tip belongs to.
  NodeId tip_owner(const TipId& t) const;
  /// Tips of a section (empty for the star).
  std::vector<TipId> section_tips(const SectionId& s) const;
  /// Tips of a 1-node, up to `limit` of them; nullopt count when infinitely many.
  std::vector<TipId> tips(const NodeId& one, std::size_t limit = 64) const;
  std::optional<std::size_t> tip_count(const NodeId& one) const;
  std::optional<NodeId> embedded(const NodeId& one) const;
  /// First n nodes of the tip's representative one-ended 0-path.
  std::vector<NodeId> tip_ray(const TipId& t, std::size_t n) const;

  /// Sections a node touches: its own for a 0-node; through tips or the
  /// embedded 0-node for a 1-node (at most `limit`).
  std::vector<SectionId> incident_sections(const NodeId& x, std::size_t limit = 64) const;
  /// 1-nodes incident to the section, up to `limit`; `infinite` reports truncation.
  std::vector<NodeId> incident_one_nodes(const SectionId& s, std::size_t limit, bool* infinite = nullptr) const;

  bool is_boundary(const NodeId& one) const;
  /// The first `count` boundary 1-nodes in index order.
  std::vector<NodeId> boundary_one_nodes(std::size_t count) const;
  bool is_locally_1_finite() const;
  bool one_adjacent(const NodeId& x1, const NodeId& y1) const;

  /// Canonical standard anchor.
  NodeId anchor() const { return enl::anchor(family_); }

 private:
  OneFamily family_ = OneFamily::DiamondChain;
};

/// Minimum walk length by lexicographic shortest-path search on the section
/// quotient restricted to a window around the endpoints.
WalkResult wdistance_search(const OneGraph& g, const NodeId& x, const NodeId& y);

/// The family closed form (validated against the search in the test suite).
Ordinal wdistance(const OneGraph& g, const NodeId& x, const NodeId& y);

/// A walk from one section to another through a shared 1-node has length >= w.
bool walk_respects_tip_crossings(const WalkResult& walk);

/// d(x1, y1) >= w for 1-nodes that are not 1-adjacent.
SeparationCheck check_nonadjacent_separation(const OneGraph& g, const NodeId& x1, const NodeId& y1);

/// Length of a walk between two 1-nodes incident to s that stays in s; nullopt
/// when either is not incident to s.
std::optional<Ordinal> walk_within_section(const OneGraph& g, const SectionId& s, const NodeId& x1,
                                           const NodeId& y1);

}  // namespace enl
