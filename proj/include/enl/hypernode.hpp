#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "enl/graph.hpp"
#include "enl/node.hpp"
#include "enl/one_graph.hpp"
#include "enl/sequence.hpp"
#include "enl/shape.hpp"

namespace enl {

using GraphRef = std::variant<GraphInstance, OneGraph>;

std::string describe(const GraphRef& g);
bool same_graph(const GraphRef& g, const GraphRef& h);
bool graph_contains(const GraphRef& g, const NodeId& x);
NodeId graph_anchor(const GraphRef& g);

/// Eventual symbolic form of a hypernode on one parity branch.
struct SymbolicNode {
  NodeKind kind;
  Shape a;
  Shape b;
};

/// [x_n]: a graph together with a representative sequence of its nodes.
class Hypernode {
 public:
  /// x_n = kind(a_n, b_n); membership checked for n < horizon.
  static Hypernode simple(const GraphRef& g, NodeKind kind, const IndexSequence& a,
                          const IndexSequence& b = IndexSequence::constant(0),
                          std::uint64_t horizon = kDefaultHorizon);
  static Hypernode standard(const GraphRef& g, const NodeId& x);
  static Hypernode parity(const Hypernode& even, const Hypernode& odd);
  static Hypernode patched(std::map<std::uint64_t, NodeId> overrides, const Hypernode& base,
                           std::uint64_t horizon = kDefaultHorizon);
  /// A sequence produced by a search. `profile` is the declared eventual
  /// distance from the graph's anchor on each parity, when known. Values are
  /// memoized; the generator must be pure.
  static Hypernode derived(const GraphRef& g, std::function<NodeId(std::uint64_t)> fn, std::string label,
                           std::optional<ByParity<OrdinalShape>> profile);

  const GraphRef& graph() const;
  NodeId at(std::uint64_t n) const;
  /// 1 for 1-hypernodes (sequences of 1-nodes), else 0.
  int rank() const;
  std::optional<ByParity<SymbolicNode>> symbolic() const;
  const std::optional<ByParity<OrdinalShape>>& profile() const;
  std::string to_string() const;

  struct Rep;

 private:
  explicit Hypernode(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

}  // namespace enl
