#include "enl/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

#include "enl/errors.hpp"

namespace enl {

namespace {

bool kept(const OneGraph& g, const NodeId& x, const Truncation& t) {
  if (!g.contains(x)) return false;
  switch (x.kind) {
    case NodeKind::OneNodeGround:
    case NodeKind::Ground: return true;
    case NodeKind::OneNode: return x.a >= t.lo && x.a <= t.hi + 1;
    case NodeKind::Embedded: return x.a >= t.lo && x.a <= t.hi + 1;
    default: return x.a >= t.lo && x.a <= t.hi && x.b >= -t.depth && x.b <= t.depth;
  }
}

}  // namespace

std::vector<NodeId> truncated_nodes(const OneGraph& g, const Truncation& t) {
  std::vector<NodeId> out;
  auto push = [&](const NodeId& x) {
    if (kept(g, x, t)) out.push_back(x);
  };
  for (std::int64_t k = t.lo; k <= t.hi + 1; ++k) {
    push(one_node(k));
    push(embedded_node(k));
    if (k > t.hi) continue;
    for (std::int64_t i = -t.depth; i <= t.depth; ++i)
      for (NodeKind kind : {NodeKind::DiamondJ, NodeKind::DiamondL, NodeKind::DiamondR, NodeKind::PathSection,
                            NodeKind::Rung, NodeKind::Rail})
        push({kind, k, i});
  }
  push(ground_node());
  push(one_node_ground());
  return out;
}

std::optional<Ordinal> enumerate_walk_distance(const OneGraph& g, const NodeId& x, const NodeId& y,
                                               const Truncation& t) {
  if (!kept(g, x, t) || !kept(g, y, t)) throw DomainError("endpoint outside the truncated model");
  auto nodes = truncated_nodes(g, t);

  // Primitive moves, precomputed per node.
  std::map<NodeId, std::vector<std::pair<NodeId, Ordinal>>, CanonicalLess> moves;
  auto link = [&](const NodeId& a, const NodeId& b, Ordinal w) {
    moves[a].push_back({b, w});
    moves[b].push_back({a, w});
  };
  for (const auto& u : nodes) {
    if (u.is_one_node()) {
      if (auto e = g.embedded(u); e && kept(g, *e, t)) link(u, *e, Ordinal());
      continue;
    }
    if (u.kind == NodeKind::Ground) {
      for (const auto& v : nodes)
        if (v.kind == NodeKind::Embedded) link(u, v, Ordinal(0, 1));
    } else {
      for (const auto& v : g.zero_neighbors(u))
        if (kept(g, v, t) && CanonicalLess{}(u, v)) link(u, v, Ordinal(0, 1));
    }
    for (const auto& tip : g.section_tips(g.section_of(u))) {
      NodeId owner = g.tip_owner(tip);
      if (kept(g, owner, t)) link(u, owner, Ordinal(1, 0));
    }
  }

  std::map<NodeId, Ordinal, CanonicalLess> best{{x, Ordinal()}};
  using Item = std::pair<Ordinal, NodeId>;
  auto cmp = [](const Item& a, const Item& b) {
    return std::tie(a.first) > std::tie(b.first) || (a.first == b.first && CanonicalLess{}(b.second, a.second));
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
  pq.push({Ordinal(), x});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (best[u] != d) continue;
    if (u == y) return d;
    for (const auto& [v, w] : moves[u]) {
      Ordinal nd = natural_sum(d, w);
      if (nd.omega_coeff() > t.max_tau1 || nd.finite_part() > t.max_tau0) continue;
      auto it = best.find(v);
      if (it == best.end() || nd < it->second) {
        best[v] = nd;
        pq.push({nd, v});
      }
    }
  }
  return std::nullopt;
}

}  // namespace enl
