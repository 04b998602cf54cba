#include "enl/sampling.hpp"

#include <map>

namespace enl {

namespace {

constexpr std::optional<std::int64_t> kAny = std::nullopt;

std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::int64_t pick_param(Rng& rng, std::optional<std::int64_t> lo, std::int64_t radius) {
  return pick(rng, lo ? std::max(*lo, -radius) : -radius, radius);
}

}  // namespace

std::vector<KindDomain> maximal_kinds(const GraphRef& g) {
  if (const auto* one = std::get_if<OneGraph>(&g)) {
    switch (one->family()) {
      case OneFamily::DiamondChain:
        return {{NodeKind::DiamondJ, 0, 0}, {NodeKind::DiamondL, 0, 0}, {NodeKind::DiamondR, 0, 0}, {NodeKind::OneNode, 0, kAny}};
      case OneFamily::OnePathOfEndlessPaths:
        return {{NodeKind::PathSection, kAny, kAny}, {NodeKind::OneNode, kAny, kAny}};
      case OneFamily::LadderOfEndlessPaths:
        return {{NodeKind::Rung, 0, kAny}, {NodeKind::Rail, 0, kAny}, {NodeKind::OneNode, 0, kAny},
                {NodeKind::OneNodeGround, kAny, kAny}};
      case OneFamily::PartialLadderOfEndlessPaths:
        return {{NodeKind::Rail, 0, kAny}, {NodeKind::OneNode, 0, kAny}, {NodeKind::Ground, kAny, kAny}};
    }
  }
  switch (std::get<GraphInstance>(g).family()) {
    case Family::EndlessPath: return {{NodeKind::Path, kAny, kAny}};
    case Family::OneEndedPath: return {{NodeKind::Path, 0, kAny}};
    case Family::Ladder: return {{NodeKind::Ladder, 0, kAny}, {NodeKind::Ground, kAny, kAny}};
    case Family::LadderWithRay: return {{NodeKind::Ladder, 0, kAny}, {NodeKind::Ground, kAny, kAny}, {NodeKind::Ray, 1, kAny}};
    case Family::Grid2D:
    case Family::PerturbedGrid: return {{NodeKind::Grid, kAny, kAny}};
  }
  return {};
}

NodeId random_node(const GraphRef& g, Rng& rng, std::int64_t radius) {
  auto kinds = maximal_kinds(g);
  const auto& d = kinds[rng() % kinds.size()];
  int ar = arity(d.kind);
  return {d.kind, ar >= 1 ? pick_param(rng, d.a_min, radius) : 0, ar == 2 ? pick_param(rng, d.b_min, radius) : 0};
}

IndexSequence random_sequence(Rng& rng, std::optional<std::int64_t> lo) {
  std::int64_t base = lo.value_or(-6);
  auto leaf = [&]() {
    std::int64_t slope = lo ? pick(rng, 0, 3) : pick(rng, -3, 3);
    std::int64_t offset = pick(rng, base, base + 8);
    if (slope < 0) offset = pick(rng, -8, 8);
    return rng() % 3 == 0 ? IndexSequence::constant(offset) : IndexSequence::affine(slope, offset);
  };
  switch (rng() % 4) {
    case 0: return IndexSequence::constant(pick(rng, base, base + 8));
    case 1: return leaf();
    case 2: return IndexSequence::parity(leaf(), leaf());
    default: {
      std::vector<std::int64_t> prefix;
      for (int i = 0, n = static_cast<int>(pick(rng, 1, 4)); i < n; ++i) prefix.push_back(pick(rng, base, base + 20));
      return IndexSequence::explicit_prefix(prefix, leaf());
    }
  }
}

Hypernode random_hypernode(const GraphRef& g, Rng& rng) {
  auto kinds = maximal_kinds(g);
  const auto& d = kinds[rng() % kinds.size()];
  int ar = arity(d.kind);
  IndexSequence a = ar >= 1 ? random_sequence(rng, d.a_min) : IndexSequence::constant(0);
  IndexSequence b = ar == 2 ? random_sequence(rng, d.b_min) : IndexSequence::constant(0);
  return Hypernode::simple(g, d.kind, a, b);
}

Hypernode perturb(const Hypernode& x, Rng& rng, std::size_t count, std::uint64_t horizon) {
  std::map<std::uint64_t, NodeId> patch;
  while (patch.size() < count) {
    std::uint64_t n = rng() % horizon;
    NodeId v = random_node(x.graph(), rng, 50);
    if (v.is_one_node() == x.at(n).is_one_node()) patch[n] = v;
  }
  return Hypernode::patched(patch, x);
}

}  // namespace enl
