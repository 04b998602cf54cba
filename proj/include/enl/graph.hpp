#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "enl/family.hpp"
#include "enl/node.hpp"

namespace enl {

/// Unordered endpoint pair; stored with the canonically smaller endpoint first.
class Branch {
 public:
  Branch(const NodeId& x, const NodeId& y);
  const NodeId& first() const { return u_; }
  const NodeId& second() const { return v_; }
  bool operator==(const Branch&) const = default;

 private:
  NodeId u_;
  NodeId v_;
};

struct GridEdit {
  enum class Op { Add, Remove };
  Op op = Op::Add;
  std::int64_t ak = 0, al = 0;
  std::int64_t bk = 0, bl = 0;
};

/// Lazy neighbor enumeration. A finite prefix followed by an optional endless tail.
class NeighborStream {
 public:
  NeighborStream(std::vector<NodeId> finite, std::function<NodeId(std::uint64_t)> tail = {})
      : finite_(std::move(finite)), tail_(std::move(tail)) {}
  std::optional<NodeId> next();
  bool infinite() const { return static_cast<bool>(tail_); }

 private:
  std::vector<NodeId> finite_;
  std::function<NodeId(std::uint64_t)> tail_;
  std::uint64_t pos_ = 0;
};

/// Axis-aligned box of grid points, inclusive.
struct GridBox {
  std::int64_t k0 = 0, k1 = -1, l0 = 0, l1 = -1;
  bool empty() const { return k0 > k1 || l0 > l1; }
  bool contains(std::int64_t k, std::int64_t l) const { return k >= k0 && k <= k1 && l >= l0 && l <= l1; }
};

/// A conventional connected infinite graph presented by oracles. Immutable.
class GraphInstance {
 public:
  /// Throws ValidationError for malformed edits and ConstructionError when the
  /// edited grid is disconnected.
  static GraphInstance make(Family family, const std::vector<GridEdit>& edits = {});

  Family family() const { return family_; }
  const std::vector<GridEdit>& edits() const;

  bool contains(const NodeId& x) const { return is_member(family_, x); }
  /// Ladder and LadderWithRay have a ground node of infinite degree.
  bool locally_finite() const;
  bool has_finite_degree(const NodeId& x) const;

  /// Full neighbor set; UnsupportedOracleError for a node of infinite degree.
  std::vector<NodeId> neighbors(const NodeId& x) const;
  NeighborStream neighbor_stream(const NodeId& x) const;
  /// Neighbors whose parameters all lie in [-radius, radius].
  std::vector<NodeId> truncated_neighbors(const NodeId& x, std::int64_t radius) const;
  bool adjacent(const NodeId& x, const NodeId& y) const;

  bool has_closed_form() const { return family_ != Family::PerturbedGrid; }
  std::uint64_t closed_form_distance(const NodeId& x, const NodeId& y) const;

  NodeId anchor() const { return enl::anchor(family_); }

  /// PerturbedGrid only: bounding box of the edit endpoints (empty without edits).
  GridBox edit_box() const;
  /// PerturbedGrid only: the edit box grown by one, outside which the grid is pristine.
  GridBox collar_box() const;
  /// Sum over added branches of (grid distance - 1): the most a path can save.
  std::int64_t added_saving() const;

  /// Exact distance in the perturbed grid; nullopt when the search exceeds budget.
  std::optional<std::uint64_t> perturbed_distance(const NodeId& x, const NodeId& y, std::uint64_t budget) const;

 private:
  struct Edited;
  Family family_ = Family::EndlessPath;
  std::shared_ptr<const Edited> edited_;
};

/// Shortest-path length: the closed form when installed, otherwise an exact
/// search bounded by `budget` node expansions. nullopt means Exhausted.
/// Non-members raise DomainError.
std::optional<std::uint64_t> distance(const GraphInstance& g, const NodeId& x, const NodeId& y,
                                      std::uint64_t budget);

struct BfsOptions {
  std::uint64_t budget = 1'000'000;
  /// When set, the search runs on the truncation to parameters in [-r, r].
  std::optional<std::int64_t> truncate;
};

/// Bidirectional breadth-first search over the adjacency oracle.
std::optional<std::uint64_t> bfs_distance(const GraphInstance& g, const NodeId& x, const NodeId& y,
                                          const BfsOptions& options);

/// Sample-level check that all pairwise distances are at most k. nullopt when a
/// distance query is exhausted.
std::optional<bool> is_finitely_dispersed(const GraphInstance& g, const std::vector<NodeId>& sample,
                                          std::uint64_t k, std::uint64_t budget = 1'000'000);

}  // namespace enl
