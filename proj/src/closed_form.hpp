#pragma once

// Closed-form distances of the catalog families, written once over a value
// type V. With V = std::int64_t they evaluate concrete distances; with
// V = Shape they derive the eventual per-parity class of a distance between
// hypernodes whose parameters are sequences.

#include <cstdint>
#include <string>
#include <utility>

#include "enl/errors.hpp"
#include "enl/family.hpp"
#include "enl/node.hpp"
#include "enl/shape.hpp"

namespace enl::detail {

template <class V>
V lit(std::int64_t c);
template <>
inline std::int64_t lit<std::int64_t>(std::int64_t c) { return c; }
template <>
inline Shape lit<Shape>(std::int64_t c) { return Shape::constant(c); }

inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) throw OverflowError("distance overflow");
  return out;
}
inline std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(x, y, &out)) throw OverflowError("distance overflow");
  return out;
}
inline Shape add(const Shape& x, const Shape& y) { return x + y; }
inline Shape sub(const Shape& x, const Shape& y) { return x - y; }

template <class V>
V absdiff(const V& x, const V& y) {
  return abs_of(sub(x, y));
}

template <class V>
struct Term {
  NodeKind kind;
  V a;
  V b;
};

inline Term<std::int64_t> term_of(const NodeId& x) { return {x.kind, x.a, x.b}; }

// ---------------------------------------------------------------- rank 0

template <class V>
V distance0(Family f, const Term<V>& x, const Term<V>& y) {
  switch (f) {
    case Family::EndlessPath:
    case Family::OneEndedPath: return absdiff(x.a, y.a);
    case Family::Grid2D: return add(absdiff(x.a, y.a), absdiff(x.b, y.b));
    case Family::Ladder:
    case Family::LadderWithRay: {
      auto rank = [](NodeKind k) { return k == NodeKind::Ground ? 0 : k == NodeKind::Ladder ? 1 : 2; };
      if (rank(x.kind) > rank(y.kind)) return distance0(f, y, x);
      switch (rank(x.kind) * 3 + rank(y.kind)) {
        case 0: return lit<V>(0);
        case 1: return lit<V>(1);
        case 2: return y.a;
        case 4: return min_of(absdiff(x.a, y.a), lit<V>(2));
        case 5: return add(y.a, lit<V>(1));
        default: return absdiff(x.a, y.a);
      }
    }
    case Family::PerturbedGrid: break;
  }
  throw UnsupportedOracleError("no closed-form distance for " + std::string(name(f)));
}

// ---------------------------------------------------------------- rank 1

// Ladder skeleton of the ladder-shaped 1-graphs: either a rail 1-node X(k) or the ground.
template <class V>
struct Rail1 {
  bool ground;
  V k;
};

// Number of skeleton steps between two 1-nodes of the ladder of endless paths.
template <class V>
V ladder_steps(const Rail1<V>& p, const Rail1<V>& q) {
  if (p.ground && q.ground) return lit<V>(0);
  if (p.ground || q.ground) return lit<V>(1);
  return min_of(absdiff(p.k, q.k), lit<V>(2));
}

// Finite distance between 1-nodes of the partial ladder (rails are endless paths,
// rungs remain single branches to the ground).
template <class V>
V partial_steps(const Rail1<V>& p, const Rail1<V>& q) {
  if (p.ground && q.ground) return lit<V>(0);
  if (p.ground || q.ground) return lit<V>(1);
  return min_of(times(absdiff(p.k, q.k), 2), lit<V>(2));
}

template <class V>
V min4(const V& a, const V& b, const V& c, const V& d) {
  return min_of(min_of(a, b), min_of(c, d));
}

// In-section finite distance for the string-of-sections families.
template <class V>
V string_section_distance(OneFamily f, const Term<V>& x, const Term<V>& y) {
  if (f == OneFamily::OnePathOfEndlessPaths) return absdiff(x.b, y.b);
  auto level = [](const Term<V>& t) {
    V twice = times(t.b, 2);
    return t.kind == NodeKind::DiamondJ ? twice : add(twice, lit<V>(1));
  };
  V d = absdiff(level(x), level(y));
  bool opposite = (x.kind == NodeKind::DiamondL && y.kind == NodeKind::DiamondR) ||
                  (x.kind == NodeKind::DiamondR && y.kind == NodeKind::DiamondL);
  return opposite ? max_of(d, lit<V>(2)) : d;
}

template <class V>
OrdinalTerm<V> string_wdistance(OneFamily f, const Term<V>& x, const Term<V>& y) {
  bool x1 = x.kind == NodeKind::OneNode, y1 = y.kind == NodeKind::OneNode;
  if (x1 && y1) return {times(absdiff(x.a, y.a), 2), lit<V>(0)};
  if (x1) return string_wdistance(f, y, x);
  if (y1) {
    // 0-node of section s to 1-node m: the section's own tips are at s and s+1.
    V delta = sub(y.a, x.a);
    V twice = times(delta, 2);
    return {select_sign(delta, sub(lit<V>(1), twice), lit<V>(1), sub(twice, lit<V>(1))), lit<V>(0)};
  }
  V delta = sub(y.a, x.a);
  V zero = lit<V>(0);
  return {times(abs_of(delta), 2), select_sign(delta, zero, string_section_distance(f, x, y), zero)};
}

template <class V>
bool is_one(const Term<V>& t) {
  return t.kind == NodeKind::OneNode || t.kind == NodeKind::OneNodeGround;
}

template <class V>
Rail1<V> rail1_of(const Term<V>& t) {
  return {t.kind == NodeKind::OneNodeGround || t.kind == NodeKind::Ground, t.a};
}

// Endpoints of the section holding a 0-node of a ladder-shaped 1-graph.
template <class V>
std::pair<Rail1<V>, Rail1<V>> section_ends(const Term<V>& t) {
  if (t.kind == NodeKind::Rung) return {Rail1<V>{false, t.a}, Rail1<V>{true, lit<V>(0)}};
  return {Rail1<V>{false, t.a}, Rail1<V>{false, add(t.a, lit<V>(1))}};
}

// Same section when the kinds agree and the section indices coincide.
template <class V>
V same_section_or(const Term<V>& x, const Term<V>& y, const V& same, const V& other) {
  if (x.kind != y.kind) return other;
  return select_sign(sub(y.a, x.a), other, same, other);
}

template <class V>
OrdinalTerm<V> ladder_wdistance(const Term<V>& x, const Term<V>& y) {
  bool x1 = is_one(x), y1 = is_one(y);
  if (x1 && y1) return {times(ladder_steps(rail1_of(x), rail1_of(y)), 2), lit<V>(0)};
  if (x1) return ladder_wdistance(y, x);
  if (y1) {
    auto [p, q] = section_ends(x);
    Rail1<V> m = rail1_of(y);
    return {add(lit<V>(1), times(min_of(ladder_steps(p, m), ladder_steps(q, m)), 2)), lit<V>(0)};
  }
  auto [p, q] = section_ends(x);
  auto [r, s] = section_ends(y);
  V across = add(lit<V>(2), times(min4(ladder_steps(p, r), ladder_steps(p, s), ladder_steps(q, r),
                                       ladder_steps(q, s)),
                                  2));
  return {same_section_or(x, y, lit<V>(0), across), same_section_or(x, y, absdiff(x.b, y.b), lit<V>(0))};
}

// Rails are sections; the star of rungs at the ground is the remaining section,
// whose 0-nodes other than the ground sit inside the rail 1-nodes.
template <class V>
OrdinalTerm<V> partial_ladder_wdistance(Term<V> x, Term<V> y) {
  auto promote = [](Term<V>& t) {
    if (t.kind == NodeKind::Embedded) t.kind = NodeKind::OneNode;
  };
  promote(x);
  promote(y);
  auto on_star = [](const Term<V>& t) { return t.kind == NodeKind::OneNode || t.kind == NodeKind::Ground; };
  bool xs = on_star(x), ys = on_star(y);
  if (xs && ys) return {lit<V>(0), partial_steps(rail1_of(x), rail1_of(y))};
  if (xs) return partial_ladder_wdistance(y, x);
  if (ys) {
    auto [p, q] = section_ends(x);
    Rail1<V> m = rail1_of(y);
    return {lit<V>(1), min_of(partial_steps(p, m), partial_steps(q, m))};
  }
  auto [p, q] = section_ends(x);
  auto [r, s] = section_ends(y);
  V across = min4(partial_steps(p, r), partial_steps(p, s), partial_steps(q, r), partial_steps(q, s));
  return {same_section_or(x, y, lit<V>(0), lit<V>(2)), same_section_or(x, y, absdiff(x.b, y.b), across)};
}

template <class V>
OrdinalTerm<V> wdistance1(OneFamily f, const Term<V>& x, const Term<V>& y) {
  switch (f) {
    case OneFamily::OnePathOfEndlessPaths:
    case OneFamily::DiamondChain: return string_wdistance(f, x, y);
    case OneFamily::LadderOfEndlessPaths: return ladder_wdistance(x, y);
    case OneFamily::PartialLadderOfEndlessPaths: return partial_ladder_wdistance(x, y);
  }
  throw UnsupportedOracleError("no closed-form wdistance");
}

}  // namespace enl::detail
