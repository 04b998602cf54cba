#include "enl/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>

#include "closed_form.hpp"
#include "enl/errors.hpp"

namespace enl {

namespace {

using Point = std::pair<std::int64_t, std::int64_t>;
using Edge = std::pair<Point, Point>;

Edge edge_key(Point a, Point b) { return a < b ? Edge{a, b} : Edge{b, a}; }

bool grid_adjacent(Point a, Point b) {
  auto dk = a.first - b.first, dl = a.second - b.second;
  return (dk == 0 && (dl == 1 || dl == -1)) || (dl == 0 && (dk == 1 || dk == -1));
}

std::vector<NodeId> sorted(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end(), CanonicalLess{});
  return v;
}

bool within(const NodeId& x, std::int64_t r) {
  return x.a >= -r && x.a <= r && x.b >= -r && x.b <= r;
}

constexpr std::int64_t kMaxCollarNodes = 4'000'000;

}  // namespace

Branch::Branch(const NodeId& x, const NodeId& y) {
  if (x == y) throw ValidationError("a branch needs two distinct endpoints: " + x.to_string());
  bool swap = canonical_order(y, x) < 0;
  u_ = swap ? y : x;
  v_ = swap ? x : y;
}

std::optional<NodeId> NeighborStream::next() {
  if (pos_ < finite_.size()) return finite_[pos_++];
  if (!tail_) return std::nullopt;
  return tail_(pos_++ - finite_.size());
}

struct GraphInstance::Edited {
  std::vector<GridEdit> edits;
  std::set<Edge> removed;
  std::map<Point, std::vector<Point>> added;
  GridBox ebox;
  GridBox cbox;
  std::int64_t saving = 0;

  bool has_edge(Point a, Point b) const {
    if (grid_adjacent(a, b) && !removed.count(edge_key(a, b))) return true;
    auto it = added.find(a);
    return it != added.end() && std::find(it->second.begin(), it->second.end(), b) != it->second.end();
  }

  std::vector<Point> neighbors(Point p) const {
    std::vector<Point> out;
    for (Point q : {Point{p.first + 1, p.second}, Point{p.first - 1, p.second}, Point{p.first, p.second + 1},
                    Point{p.first, p.second - 1}})
      if (!removed.count(edge_key(p, q))) out.push_back(q);
    if (auto it = added.find(p); it != added.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    return out;
  }
};

GraphInstance GraphInstance::make(Family family, const std::vector<GridEdit>& edits) {
  GraphInstance g;
  g.family_ = family;
  if (family != Family::PerturbedGrid) {
    if (!edits.empty()) throw ValidationError("edits are only allowed for perturbed_grid");
    return g;
  }
  auto e = std::make_shared<Edited>();
  e->edits = edits;
  auto erase_added = [&](Point a, Point b) {
    auto& va = e->added[a];
    va.erase(std::find(va.begin(), va.end(), b));
    if (va.empty()) e->added.erase(a);
  };
  for (const auto& ed : edits) {
    Point a{ed.ak, ed.al}, b{ed.bk, ed.bl};
    if (a == b) throw ValidationError("edit endpoints must differ");
    bool exists = e->has_edge(a, b);
    if (ed.op == GridEdit::Op::Add) {
      if (exists) throw ValidationError("add would create a parallel branch");
      if (grid_adjacent(a, b)) {
        e->removed.erase(edge_key(a, b));
      } else {
        e->added[a].push_back(b);
        e->added[b].push_back(a);
      }
    } else {
      if (!exists) throw ValidationError("remove targets a branch that does not exist");
      if (grid_adjacent(a, b)) {
        e->removed.insert(edge_key(a, b));
      } else {
        erase_added(a, b);
        erase_added(b, a);
      }
    }
    if (e->ebox.empty()) e->ebox = {a.first, a.first, a.second, a.second};
    for (Point p : {a, b}) {
      e->ebox.k0 = std::min(e->ebox.k0, p.first);
      e->ebox.k1 = std::max(e->ebox.k1, p.first);
      e->ebox.l0 = std::min(e->ebox.l0, p.second);
      e->ebox.l1 = std::max(e->ebox.l1, p.second);
    }
  }
  for (const auto& [p, qs] : e->added)
    for (Point q : qs)
      if (p < q) e->saving += std::abs(p.first - q.first) + std::abs(p.second - q.second) - 1;

  if (!e->ebox.empty()) {
    e->cbox = {e->ebox.k0 - 1, e->ebox.k1 + 1, e->ebox.l0 - 1, e->ebox.l1 + 1};
    const GridBox& c = e->cbox;
    std::int64_t w = c.k1 - c.k0 + 1, h = c.l1 - c.l0 + 1;
    if (w > kMaxCollarNodes / h) throw ValidationError("edit region too large");
    // The ring of the collar box is untouched and joined to the pristine outside,
    // so the graph is connected iff every box node reaches the ring inside the box.
    std::vector<char> seen(static_cast<std::size_t>(w * h), 0);
    auto idx = [&](Point p) { return static_cast<std::size_t>((p.first - c.k0) * h + (p.second - c.l0)); };
    std::vector<Point> stack;
    for (std::int64_t k = c.k0; k <= c.k1; ++k)
      for (std::int64_t l = c.l0; l <= c.l1; ++l)
        if (k == c.k0 || k == c.k1 || l == c.l0 || l == c.l1) {
          seen[idx({k, l})] = 1;
          stack.push_back({k, l});
        }
    while (!stack.empty()) {
      Point p = stack.back();
      stack.pop_back();
      for (Point q : e->neighbors(p))
        if (c.contains(q.first, q.second) && !seen[idx(q)]) {
          seen[idx(q)] = 1;
          stack.push_back(q);
        }
    }
    for (std::int64_t k = c.k0; k <= c.k1; ++k)
      for (std::int64_t l = c.l0; l <= c.l1; ++l)
        if (!seen[idx({k, l})])
          throw ConstructionError("edit list disconnects the grid at " + grid_node(k, l).to_string());
  }
  g.edited_ = std::move(e);
  return g;
}

const std::vector<GridEdit>& GraphInstance::edits() const {
  static const std::vector<GridEdit> none;
  return edited_ ? edited_->edits : none;
}

bool GraphInstance::locally_finite() const {
  return family_ != Family::Ladder && family_ != Family::LadderWithRay;
}

bool GraphInstance::has_finite_degree(const NodeId& x) const { return x.kind != NodeKind::Ground; }

std::vector<NodeId> GraphInstance::neighbors(const NodeId& x) const {
  if (!contains(x)) throw DomainError(x.to_string() + " is not a node of " + std::string(name(family_)));
  switch (family_) {
    case Family::EndlessPath: return {path_node(x.a - 1), path_node(x.a + 1)};
    case Family::OneEndedPath:
      if (x.a == 0) return {path_node(1)};
      return {path_node(x.a - 1), path_node(x.a + 1)};
    case Family::Ladder:
    case Family::LadderWithRay:
      if (x.kind == NodeKind::Ground)
        throw UnsupportedOracleError("lad:g has infinite degree; use neighbor_stream");
      if (x.kind == NodeKind::Ladder) {
        std::vector<NodeId> out{ground_node(), ladder_node(x.a + 1)};
        if (x.a > 0) out.push_back(ladder_node(x.a - 1));
        return sorted(out);
      }
      if (x.a == 1) return sorted({ground_node(), ray_node(2)});
      return sorted({ray_node(x.a - 1), ray_node(x.a + 1)});
    case Family::Grid2D:
      return sorted({grid_node(x.a + 1, x.b), grid_node(x.a - 1, x.b), grid_node(x.a, x.b + 1),
                     grid_node(x.a, x.b - 1)});
    case Family::PerturbedGrid: {
      std::vector<NodeId> out;
      for (Point q : edited_->neighbors({x.a, x.b})) out.push_back(grid_node(q.first, q.second));
      return sorted(out);
    }
  }
  return {};
}

NeighborStream GraphInstance::neighbor_stream(const NodeId& x) const {
  if (x.kind == NodeKind::Ground && contains(x)) {
    std::vector<NodeId> head;
    if (family_ == Family::LadderWithRay) head.push_back(ray_node(1));
    return {head, [](std::uint64_t n) { return ladder_node(static_cast<std::int64_t>(n)); }};
  }
  return NeighborStream(neighbors(x));
}

std::vector<NodeId> GraphInstance::truncated_neighbors(const NodeId& x, std::int64_t radius) const {
  std::vector<NodeId> out;
  if (x.kind == NodeKind::Ground && contains(x)) {
    for (std::int64_t k = 0; k <= radius; ++k) out.push_back(ladder_node(k));
    if (family_ == Family::LadderWithRay && radius >= 1) out.push_back(ray_node(1));
    return sorted(out);
  }
  for (const auto& y : neighbors(x))
    if (within(y, radius)) out.push_back(y);
  return out;
}

bool GraphInstance::adjacent(const NodeId& x, const NodeId& y) const {
  if (!contains(x) || !contains(y)) return false;
  if (x.kind == NodeKind::Ground) {
    if (y.kind == NodeKind::Ladder) return true;
    return y.kind == NodeKind::Ray && y.a == 1;
  }
  auto n = neighbors(x);
  return std::find(n.begin(), n.end(), y) != n.end();
}

std::uint64_t GraphInstance::closed_form_distance(const NodeId& x, const NodeId& y) const {
  if (!has_closed_form()) throw UnsupportedOracleError("perturbed_grid has no closed-form distance");
  for (const auto* n : {&x, &y})
    if (!contains(*n)) throw DomainError(n->to_string() + " is not a node of " + std::string(name(family_)));
  return static_cast<std::uint64_t>(detail::distance0(family_, detail::term_of(x), detail::term_of(y)));
}

GridBox GraphInstance::edit_box() const { return edited_ ? edited_->ebox : GridBox{}; }
GridBox GraphInstance::collar_box() const { return edited_ ? edited_->cbox : GridBox{}; }
std::int64_t GraphInstance::added_saving() const { return edited_ ? edited_->saving : 0; }

std::optional<std::uint64_t> GraphInstance::perturbed_distance(const NodeId& x, const NodeId& y,
                                                               std::uint64_t budget) const {
  if (family_ != Family::PerturbedGrid) throw UnsupportedOracleError("not a perturbed grid");
  for (const auto* n : {&x, &y})
    if (!contains(*n)) throw DomainError(n->to_string() + " is not a node of perturbed_grid");
  const Edited& e = *edited_;
  if (e.ebox.empty()) return static_cast<std::uint64_t>(detail::distance0(Family::Grid2D, detail::term_of(x), detail::term_of(y)));

  // Every removed branch lies inside the collar box, so shortest paths can be
  // drawn on the grid lines through the box and through the two endpoints,
  // with the runs between those lines contracted to weighted edges.
  std::vector<std::int64_t> ks{x.a, y.a}, ls{x.b, y.b};
  for (std::int64_t k = e.cbox.k0; k <= e.cbox.k1; ++k) ks.push_back(k);
  for (std::int64_t l = e.cbox.l0; l <= e.cbox.l1; ++l) ls.push_back(l);
  for (auto* v : {&ks, &ls}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  const std::size_t nk = ks.size(), nl = ls.size();
  auto kpos = [&](std::int64_t k) { return static_cast<std::size_t>(std::lower_bound(ks.begin(), ks.end(), k) - ks.begin()); };
  auto lpos = [&](std::int64_t l) { return static_cast<std::size_t>(std::lower_bound(ls.begin(), ls.end(), l) - ls.begin()); };
  auto id = [&](std::size_t i, std::size_t j) { return i * nl + j; };

  std::vector<std::uint64_t> dist(nk * nl, UINT64_MAX);
  using Item = std::pair<std::uint64_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  const std::size_t src = id(kpos(x.a), lpos(x.b)), dst = id(kpos(y.a), lpos(y.b));
  dist[src] = 0;
  pq.push({0, src});
  std::uint64_t pops = 0;
  auto relax = [&](std::size_t to, std::uint64_t d) {
    if (d < dist[to]) {
      dist[to] = d;
      pq.push({d, to});
    }
  };
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    if (u == dst) return d;
    if (++pops > budget) return std::nullopt;
    std::size_t i = u / nl, j = u % nl;
    Point p{ks[i], ls[j]};
    auto step = [&](std::size_t i2, std::size_t j2) {
      Point q{ks[i2], ls[j2]};
      auto w = static_cast<std::uint64_t>(std::abs(q.first - p.first) + std::abs(q.second - p.second));
      if (w == 1 && e.removed.count(edge_key(p, q))) return;
      relax(id(i2, j2), d + w);
    };
    if (i + 1 < nk) step(i + 1, j);
    if (i > 0) step(i - 1, j);
    if (j + 1 < nl) step(i, j + 1);
    if (j > 0) step(i, j - 1);
    if (auto it = e.added.find(p); it != e.added.end())
      for (Point q : it->second) relax(id(kpos(q.first), lpos(q.second)), d + 1);
  }
  throw UnreachableError("perturbed grid search found no path");
}

std::optional<std::uint64_t> distance(const GraphInstance& g, const NodeId& x, const NodeId& y,
                                      std::uint64_t budget) {
  if (g.has_closed_form()) return g.closed_form_distance(x, y);
  return g.perturbed_distance(x, y, budget);
}

std::optional<std::uint64_t> bfs_distance(const GraphInstance& g, const NodeId& x, const NodeId& y,
                                          const BfsOptions& options) {
  for (const auto* n : {&x, &y})
    if (!g.contains(*n)) throw DomainError(n->to_string() + " is not a node of " + std::string(name(g.family())));
  if (options.truncate && (!within(x, *options.truncate) || !within(y, *options.truncate)))
    throw DomainError("endpoint outside the truncation");
  if (x == y) return 0;
  using Map = std::unordered_map<NodeId, std::uint64_t, NodeIdHash>;
  Map seen[2];
  std::vector<NodeId> frontier[2] = {{x}, {y}};
  seen[0][x] = 0;
  seen[1][y] = 0;
  std::uint64_t spent = 0;
  while (!frontier[0].empty() && !frontier[1].empty()) {
    int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::optional<std::uint64_t> best;
    std::vector<NodeId> next;
    for (const auto& u : frontier[s]) {
      std::uint64_t du = seen[s][u];
      auto visit = [&](const NodeId& v) {
        if (auto it = seen[1 - s].find(v); it != seen[1 - s].end()) {
          std::uint64_t cand = du + 1 + it->second;
          if (!best || cand < *best) best = cand;
        }
        if (seen[s].emplace(v, du + 1).second) next.push_back(v);
      };
      if (options.truncate) {
        for (const auto& v : g.truncated_neighbors(u, *options.truncate)) {
          if (++spent > options.budget) return std::nullopt;
          visit(v);
        }
      } else {
        auto stream = g.neighbor_stream(u);
        while (auto v = stream.next()) {
          if (++spent > options.budget) return std::nullopt;
          visit(*v);
        }
      }
    }
    if (best) return best;
    frontier[s] = std::move(next);
  }
  throw UnreachableError("no path between " + x.to_string() + " and " + y.to_string());
}

std::optional<bool> is_finitely_dispersed(const GraphInstance& g, const std::vector<NodeId>& sample,
                                          std::uint64_t k, std::uint64_t budget) {
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      auto d = distance(g, sample[i], sample[j], budget);
      if (!d) return std::nullopt;
      if (*d > k) return false;
    }
  return true;
}

}  // namespace enl
