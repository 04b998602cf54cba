#pragma once

// Test-side reference models, written from the family definitions and kept
// independent of the library's adjacency code.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "enl/family.hpp"
#include "enl/node.hpp"

namespace ref {

using enl::NodeId;

inline bool in_range(const NodeId& x, std::int64_t r) {
  return x.a >= -r && x.a <= r && x.b >= -r && x.b <= r;
}

// Explicit edge list of the radius-r truncation.
inline std::vector<std::pair<NodeId, NodeId>> truncated_edges(enl::Family f, std::int64_t r) {
  using namespace enl;
  std::vector<std::pair<NodeId, NodeId>> e;
  switch (f) {
    case Family::EndlessPath:
      for (std::int64_t k = -r; k < r; ++k) e.push_back({path_node(k), path_node(k + 1)});
      break;
    case Family::OneEndedPath:
      for (std::int64_t k = 0; k < r; ++k) e.push_back({path_node(k), path_node(k + 1)});
      break;
    case Family::LadderWithRay:
      e.push_back({ground_node(), ray_node(1)});
      for (std::int64_t j = 1; j < r; ++j) e.push_back({ray_node(j), ray_node(j + 1)});
      [[fallthrough]];
    case Family::Ladder:
      for (std::int64_t k = 0; k <= r; ++k) {
        e.push_back({ladder_node(k), ground_node()});
        if (k < r) e.push_back({ladder_node(k), ladder_node(k + 1)});
      }
      break;
    case Family::Grid2D:
    case Family::PerturbedGrid:
      for (std::int64_t k = -r; k <= r; ++k)
        for (std::int64_t l = -r; l <= r; ++l) {
          if (k < r) e.push_back({grid_node(k, l), grid_node(k + 1, l)});
          if (l < r) e.push_back({grid_node(k, l), grid_node(k, l + 1)});
        }
      break;
  }
  return e;
}

struct Adjacency {
  std::map<NodeId, std::set<NodeId, enl::CanonicalLess>, enl::CanonicalLess> adj;

  void add(const NodeId& a, const NodeId& b) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  void remove(const NodeId& a, const NodeId& b) {
    adj[a].erase(b);
    adj[b].erase(a);
  }

  std::optional<std::uint64_t> bfs(const NodeId& s, const NodeId& t) const {
    std::map<NodeId, std::uint64_t, enl::CanonicalLess> d{{s, 0}};
    std::deque<NodeId> q{s};
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop_front();
      if (u == t) return d[u];
      auto it = adj.find(u);
      if (it == adj.end()) continue;
      for (const auto& v : it->second)
        if (d.emplace(v, d[u] + 1).second) q.push_back(v);
    }
    return std::nullopt;
  }
};

inline Adjacency truncation(enl::Family f, std::int64_t r) {
  Adjacency a;
  for (auto& [x, y] : truncated_edges(f, r)) a.add(x, y);
  return a;
}

}  // namespace ref
