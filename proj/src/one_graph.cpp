#include "enl/one_graph.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

#include "closed_form.hpp"
#include "enl/errors.hpp"

namespace enl {

namespace {

std::uint64_t enumeration_key(std::int64_t v) {
  return v > 0 ? 2 * static_cast<std::uint64_t>(v) - 1 : 2 * (0 - static_cast<std::uint64_t>(v));
}

std::int64_t from_enumeration(std::uint64_t n) {
  return n % 2 == 1 ? static_cast<std::int64_t>((n + 1) / 2) : -static_cast<std::int64_t>(n / 2);
}

std::uint64_t absdiff(std::int64_t a, std::int64_t b) {
  return a > b ? static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b)
               : static_cast<std::uint64_t>(b) - static_cast<std::uint64_t>(a);
}

NodeId path_like(SectionKind kind, std::int64_t k, std::int64_t i) {
  switch (kind) {
    case SectionKind::Segment: return section_node(k, i);
    case SectionKind::Rung: return rung_node(k, i);
    default: return rail_node(k, i);
  }
}

std::uint64_t diamond_level(const NodeId& x) {
  std::uint64_t twice = 2 * static_cast<std::uint64_t>(x.b);
  return x.kind == NodeKind::DiamondJ ? twice : twice + 1;
}

}  // namespace

std::string SectionId::to_string() const {
  switch (kind) {
    case SectionKind::Chain: return "C" + std::to_string(index);
    case SectionKind::Segment: return "S" + std::to_string(index);
    case SectionKind::Rung: return "V" + std::to_string(index);
    case SectionKind::Rail: return "H" + std::to_string(index);
    case SectionKind::Star: return "star";
  }
  return "?";
}

bool section_less(const SectionId& s, const SectionId& t) {
  return std::tuple(s.kind, enumeration_key(s.index)) < std::tuple(t.kind, enumeration_key(t.index));
}

std::string TipId::to_string() const {
  const char* names[] = {"LeftRay", "RightRay", "Backward", "Forward"};
  return std::string(names[static_cast<int>(ray)]) + "(" + section.to_string() + ")";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

OneGraph OneGraph::make(OneFamily family) {
  OneGraph g;
  g.family_ = family;
  return g;
}

bool OneGraph::is_maximal(const NodeId& x) const { return x.kind != NodeKind::Embedded; }

NodeId OneGraph::promote(const NodeId& x) const {
  if (!contains(x)) throw DomainError(x.to_string() + " is not a node of " + std::string(name(family_)));
  return x.kind == NodeKind::Embedded ? one_node(x.a) : x;
}

bool OneGraph::zero_degree_finite(const NodeId& x) const { return x.kind != NodeKind::Ground; }

std::vector<NodeId> OneGraph::zero_neighbors(const NodeId& x) const {
  if (!contains(x) || x.is_one_node())
    throw DomainError(x.to_string() + " is not a 0-node of " + std::string(name(family_)));
  switch (x.kind) {
    case NodeKind::DiamondJ: {
      std::vector<NodeId> out{diamond_left(x.a, x.b), diamond_right(x.a, x.b)};
      if (x.b > 0) {
        out.push_back(diamond_left(x.a, x.b - 1));
        out.push_back(diamond_right(x.a, x.b - 1));
      }
      return out;
    }
    case NodeKind::DiamondL:
    case NodeKind::DiamondR: return {junction(x.a, x.b), junction(x.a, x.b + 1)};
    case NodeKind::PathSection:
    case NodeKind::Rung:
    case NodeKind::Rail: return {NodeId{x.kind, x.a, x.b - 1}, NodeId{x.kind, x.a, x.b + 1}};
    case NodeKind::Embedded: return {ground_node()};
    case NodeKind::Ground: throw UnsupportedOracleError("x_g has infinite degree");
    default: break;
  }
  throw DomainError(x.to_string() + " has no 0-neighbors");
}

SectionId OneGraph::section_of(const NodeId& x) const {
  if (!contains(x) || x.is_one_node())
    throw DomainError(x.to_string() + " is not a 0-node of " + std::string(name(family_)));
  switch (x.kind) {
    case NodeKind::DiamondJ:
    case NodeKind::DiamondL:
    case NodeKind::DiamondR: return {SectionKind::Chain, x.a};
    case NodeKind::PathSection: return {SectionKind::Segment, x.a};
    case NodeKind::Rung: return {SectionKind::Rung, x.a};
    case NodeKind::Rail: return {SectionKind::Rail, x.a};
    default: return {SectionKind::Star, 0};
  }
}

bool OneGraph::in_section(const SectionId& s, const NodeId& x) const {
  return contains(x) && !x.is_one_node() && section_of(x) == s;
}

SectionId OneGraph::section(std::uint64_t n) const {
  auto k = static_cast<std::int64_t>(n);
  switch (family_) {
    case OneFamily::DiamondChain: return {SectionKind::Chain, k};
    case OneFamily::OnePathOfEndlessPaths: return {SectionKind::Segment, from_enumeration(n)};
    case OneFamily::LadderOfEndlessPaths:
      return {n % 2 == 0 ? SectionKind::Rung : SectionKind::Rail, static_cast<std::int64_t>(n / 2)};
    case OneFamily::PartialLadderOfEndlessPaths:
      if (n == 0) return {SectionKind::Star, 0};
      return {SectionKind::Rail, k - 1};
  }
  return {};
}

std::uint64_t OneGraph::section_distance(const SectionId& s, const NodeId& x, const NodeId& y) const {
  if (!in_section(s, x) || !in_section(s, y))
    throw DomainError("nodes " + x.to_string() + ", " + y.to_string() + " are not both in " + s.to_string());
  if (x == y) return 0;
  switch (s.kind) {
    case SectionKind::Chain: {
      std::uint64_t d = absdiff(static_cast<std::int64_t>(diamond_level(x)), static_cast<std::int64_t>(diamond_level(y)));
      bool opposite = x.kind != y.kind && x.kind != NodeKind::DiamondJ && y.kind != NodeKind::DiamondJ;
      return opposite ? std::max<std::uint64_t>(d, 2) : d;
    }
    case SectionKind::Star: return x.kind == y.kind ? 2 : 1;
    default: return absdiff(x.b, y.b);
  }
}

NodeId OneGraph::tip_owner(const TipId& t) const {
  std::int64_t k = t.section.index;
  switch (t.section.kind) {
    case SectionKind::Chain: return one_node(t.ray == TipRay::Left ? k : k + 1);
    case SectionKind::Rung: return t.ray == TipRay::Backward ? one_node(k) : one_node_ground();
    case SectionKind::Segment:
    case SectionKind::Rail: return one_node(t.ray == TipRay::Backward ? k : k + 1);
    case SectionKind::Star: break;
  }
  throw DomainError("the star section has no tips");
}

std::vector<TipId> OneGraph::section_tips(const SectionId& s) const {
  switch (s.kind) {
    case SectionKind::Chain: return {{s, TipRay::Left}, {s, TipRay::Right}};
    case SectionKind::Star: return {};
    default: return {{s, TipRay::Backward}, {s, TipRay::Forward}};
  }
}

std::vector<TipId> OneGraph::tips(const NodeId& one, std::size_t limit) const {
  if (!contains(one) || !one.is_one_node())
    throw DomainError(one.to_string() + " is not a 1-node of " + std::string(name(family_)));
  std::int64_t k = one.a;
  std::vector<TipId> out;
  switch (family_) {
    case OneFamily::DiamondChain:
      if (k >= 1) out.push_back({{SectionKind::Chain, k - 1}, TipRay::Right});
      out.push_back({{SectionKind::Chain, k}, TipRay::Left});
      break;
    case OneFamily::OnePathOfEndlessPaths:
      out = {{{SectionKind::Segment, k - 1}, TipRay::Forward}, {{SectionKind::Segment, k}, TipRay::Backward}};
      break;
    case OneFamily::LadderOfEndlessPaths:
      if (one.kind == NodeKind::OneNodeGround) {
        for (std::size_t j = 0; j < limit; ++j)
          out.push_back({{SectionKind::Rung, static_cast<std::int64_t>(j)}, TipRay::Forward});
        return out;
      }
      out.push_back({{SectionKind::Rung, k}, TipRay::Backward});
      if (k >= 1) out.push_back({{SectionKind::Rail, k - 1}, TipRay::Forward});
      out.push_back({{SectionKind::Rail, k}, TipRay::Backward});
      break;
    case OneFamily::PartialLadderOfEndlessPaths:
      if (k >= 1) out.push_back({{SectionKind::Rail, k - 1}, TipRay::Forward});
      out.push_back({{SectionKind::Rail, k}, TipRay::Backward});
      break;
  }
  if (out.size() > limit) out.resize(limit);
  return out;
}

std::optional<std::size_t> OneGraph::tip_count(const NodeId& one) const {
  if (one.kind == NodeKind::OneNodeGround && contains(one)) return std::nullopt;
  return tips(one).size();
}

std::optional<NodeId> OneGraph::embedded(const NodeId& one) const {
  if (family_ == OneFamily::PartialLadderOfEndlessPaths && one.kind == NodeKind::OneNode && contains(one))
    return embedded_node(one.a);
  return std::nullopt;
}

std::vector<NodeId> OneGraph::tip_ray(const TipId& t, std::size_t n) const {
  std::vector<NodeId> out;
  std::int64_t k = t.section.index;
  for (std::size_t i = 0; out.size() < n; ++i) {
    auto s = static_cast<std::int64_t>(i);
    switch (t.ray) {
      case TipRay::Left:
      case TipRay::Right:
        out.push_back(junction(k, s));
        if (out.size() < n) out.push_back(t.ray == TipRay::Left ? diamond_left(k, s) : diamond_right(k, s));
        break;
      case TipRay::Backward: out.push_back(path_like(t.section.kind, k, -s)); break;
      case TipRay::Forward: out.push_back(path_like(t.section.kind, k, s)); break;
    }
  }
  return out;
}

std::vector<SectionId> OneGraph::incident_sections(const NodeId& x, std::size_t limit) const {
  if (!x.is_one_node()) return {section_of(x)};
  std::vector<SectionId> out;
  auto push = [&](const SectionId& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  if (auto e = embedded(x)) push(section_of(*e));
  for (const auto& t : tips(x, limit)) push(t.section);
  if (out.size() > limit) out.resize(limit);
  return out;
}

std::vector<NodeId> OneGraph::incident_one_nodes(const SectionId& s, std::size_t limit, bool* infinite) const {
  if (infinite) *infinite = false;
  std::vector<NodeId> out;
  if (s.kind == SectionKind::Star) {
    if (infinite) *infinite = true;
    for (std::size_t k = 0; k < limit; ++k) out.push_back(one_node(static_cast<std::int64_t>(k)));
    return out;
  }
  for (const auto& t : section_tips(s)) out.push_back(tip_owner(t));
  if (out.size() > limit) out.resize(limit);
  return out;
}

bool OneGraph::is_boundary(const NodeId& one) const {
  if (!contains(one) || !one.is_one_node()) throw DomainError(one.to_string() + " is not a 1-node");
  return incident_sections(one, 2).size() >= 2;
}

std::vector<NodeId> OneGraph::boundary_one_nodes(std::size_t count) const {
  std::vector<NodeId> out;
  if (family_ == OneFamily::LadderOfEndlessPaths && count > 0) out.push_back(one_node_ground());
  for (std::uint64_t n = 0; out.size() < count; ++n) {
    std::int64_t k = family_ == OneFamily::OnePathOfEndlessPaths ? from_enumeration(n) : static_cast<std::int64_t>(n);
    if (is_boundary(one_node(k))) out.push_back(one_node(k));
  }
  return out;
}

bool OneGraph::is_locally_1_finite() const { return family_ != OneFamily::PartialLadderOfEndlessPaths; }

namespace {

// How a quotient vertex touches a section.
enum class Role { Member, Tip, Embedded };

struct Touch {
  SectionId section;
  Role role;
  NodeId zero;  // the member or embedded 0-node
};

bool touches(const OneGraph& g, const SectionId& s, const NodeId& one) {
  if (auto e = g.embedded(one); e && g.section_of(*e) == s) return true;
  if (s.kind == SectionKind::Star) return false;
  for (const auto& t : g.section_tips(s))
    if (g.tip_owner(t) == one) return true;
  return false;
}

std::vector<Touch> touches_of(const OneGraph& g, const NodeId& v, std::int64_t lo, std::int64_t hi) {
  if (!v.is_one_node()) return {{g.section_of(v), Role::Member, v}};
  std::vector<Touch> out;
  if (auto e = g.embedded(v)) out.push_back({g.section_of(*e), Role::Embedded, *e});
  if (v.kind == NodeKind::OneNodeGround) {
    for (std::int64_t k = std::max<std::int64_t>(lo, 0); k <= hi; ++k)
      out.push_back({{SectionKind::Rung, k}, Role::Tip, v});
    return out;
  }
  for (const auto& t : g.tips(v)) out.push_back({t.section, Role::Tip, v});
  return out;
}

std::optional<Ordinal> touch_weight(const OneGraph& g, const Touch& a, const Touch& b) {
  if (!(a.section == b.section)) return std::nullopt;
  bool ta = a.role == Role::Tip, tb = b.role == Role::Tip;
  if (ta && tb) return Ordinal(2, 0);
  if (ta || tb) return Ordinal(1, 0);
  return Ordinal(0, g.section_distance(a.section, a.zero, b.zero));
}

std::int64_t window_index(const NodeId& x) {
  return x.kind == NodeKind::Ground || x.kind == NodeKind::OneNodeGround ? 0 : x.a;
}

struct Key {
  Ordinal length;
  std::vector<SectionId> sections;
};

bool key_less(const Key& a, const Key& b) {
  if (a.length != b.length) return a.length < b.length;
  return std::lexicographical_compare(a.sections.begin(), a.sections.end(), b.sections.begin(), b.sections.end(),
                                      section_less);
}

}  // namespace

std::optional<Ordinal> walk_within_section(const OneGraph& g, const SectionId& s, const NodeId& x1,
                                           const NodeId& y1) {
  if (!touches(g, s, x1) || !touches(g, s, y1)) return std::nullopt;
  if (x1 == y1) return Ordinal();
  auto role = [&](const NodeId& v) -> Touch {
    if (auto e = g.embedded(v); e && g.section_of(*e) == s) return {s, Role::Embedded, *e};
    return {s, Role::Tip, v};
  };
  return touch_weight(g, role(x1), role(y1));
}

WalkResult wdistance_search(const OneGraph& g, const NodeId& x0, const NodeId& y0) {
  NodeId x = g.promote(x0), y = g.promote(y0);
  if (x == y) return {};
  std::int64_t lo = std::min(window_index(x), window_index(y)) - 2;
  std::int64_t hi = std::max(window_index(x), window_index(y)) + 2;
  if (g.family() != OneFamily::OnePathOfEndlessPaths) lo = std::max<std::int64_t>(lo, 0);

  std::vector<NodeId> verts{x, y};
  auto add_vertex = [&](const NodeId& v) {
    if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
  };
  for (std::int64_t k = lo; k <= hi + 1; ++k) add_vertex(one_node(k));
  if (g.family() == OneFamily::LadderOfEndlessPaths) add_vertex(one_node_ground());

  const std::size_t n = verts.size();
  std::vector<std::vector<Touch>> touch(n);
  for (std::size_t i = 0; i < n; ++i) touch[i] = touches_of(g, verts[i], lo, hi + 1);

  struct Edge {
    Ordinal length;
    SectionId section;
  };
  auto edge = [&](std::size_t i, std::size_t j) -> std::optional<Edge> {
    std::optional<Edge> best;
    for (const auto& a : touch[i])
      for (const auto& b : touch[j])
        if (auto w = touch_weight(g, a, b))
          if (!best || *w < best->length || (*w == best->length && section_less(a.section, best->section)))
            best = Edge{*w, a.section};
    return best;
  };

  std::vector<std::optional<Key>> key(n);
  std::vector<std::optional<std::pair<std::size_t, Edge>>> parent(n);
  std::vector<char> done(n, 0);
  key[0] = Key{};
  while (true) {
    std::optional<std::size_t> u;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && key[i] && (!u || key_less(*key[i], *key[*u]))) u = i;
    if (!u || *u == 1) break;
    done[*u] = 1;
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v]) continue;
      auto e = edge(*u, v);
      if (!e) continue;
      Key cand{natural_sum(key[*u]->length, e->length), key[*u]->sections};
      cand.sections.push_back(e->section);
      if (!key[v] || key_less(cand, *key[v])) {
        key[v] = std::move(cand);
        parent[v] = std::pair{*u, *e};
      }
    }
  }
  if (!key[1]) throw UnreachableError(x.to_string() + " and " + y.to_string() + " are not 1-wconnected");
  WalkResult out;
  out.length = key[1]->length;
  for (std::size_t v = 1; v != 0; v = parent[v]->first) {
    const auto& [u, e] = *parent[v];
    out.witness.push_back({verts[u], verts[v], e.section, e.length});
  }
  std::reverse(out.witness.begin(), out.witness.end());
  return out;
}

Ordinal wdistance(const OneGraph& g, const NodeId& x0, const NodeId& y0) {
  NodeId x = g.promote(x0), y = g.promote(y0);
  auto d = detail::wdistance1(g.family(), detail::term_of(x), detail::term_of(y));
  if (d.omega < 0 || d.finite < 0) throw DomainError("negative walk length");
  return {static_cast<std::uint64_t>(d.omega), static_cast<std::uint64_t>(d.finite)};
}

bool walk_respects_tip_crossings(const WalkResult& walk) {
  for (std::size_t i = 0; i + 1 < walk.witness.size(); ++i) {
    const auto& a = walk.witness[i];
    const auto& b = walk.witness[i + 1];
    if (a.to.is_one_node() && !(a.section == b.section) && walk.length.omega_coeff() < 1) return false;
  }
  return true;
}

bool OneGraph::one_adjacent(const NodeId& x1, const NodeId& y1) const {
  for (const auto* v : {&x1, &y1})
    if (!contains(*v) || !v->is_one_node()) throw DomainError(v->to_string() + " is not a 1-node");
  // Take sections from the side with finitely many.
  const NodeId& finite_side = x1.kind == NodeKind::OneNodeGround ? y1 : x1;
  const NodeId& other = x1.kind == NodeKind::OneNodeGround ? x1 : y1;
  for (const auto& s : incident_sections(finite_side))
    if (touches(*this, s, other)) return true;
  return false;
}

SeparationCheck check_nonadjacent_separation(const OneGraph& g, const NodeId& x1, const NodeId& y1) {
  SeparationCheck out;
  for (const auto* v : {&x1, &y1})
    if (!g.contains(*v) || !v->is_one_node()) {
      out.reason = v->to_string() + " is not a 1-node";
      return out;
    }
  if (x1 == y1) {
    out.reason = "the two 1-nodes coincide";
    return out;
  }
  if (g.one_adjacent(x1, y1)) {
    out.reason = x1.to_string() + " and " + y1.to_string() + " are 1-adjacent";
    return out;
  }
  out.distance = wdistance_search(g, x1, y1).length;
  out.verdict = out.distance->omega_coeff() >= 1 ? Verdict::Pass : Verdict::Fail;
  return out;
}

}  // namespace enl
