#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "enl/hypernode.hpp"
#include "enl/ordinal.hpp"
#include "enl/shape.hpp"

namespace enl {

/// What the evidence says about a truth set on one parity branch, for all n >= from.
enum class Eventually { True, False, Unknown };

/// A decidable predicate over n with per-parity classification evidence.
struct TruthSet {
  std::function<bool(std::uint64_t)> predicate;
  ByParity<Eventually> evidence{Eventually::Unknown, Eventually::Unknown};
  std::uint64_t from = 0;

  static TruthSet at_least(std::uint64_t k);
  static TruthSet below(std::uint64_t k);
  static TruthSet evens();
  static TruthSet odds();
  TruthSet complement() const;
};

/// Three-valued membership in a free ultrafilter. True and False hold for every
/// free ultrafilter; FilterDependent when the set is neither finite nor cofinite.
/// The evidence is checked against the predicate on [from, horizon).
/// Throws IndeterminateError when the evidence is Unknown on a branch.
Trivalent in_filter(const TruthSet& set, std::uint64_t horizon = kDefaultHorizon);

/// Combines per-parity eventual verdicts into a kernel verdict.
Trivalent decide(const ByParity<Eventually>& evidence, const std::string& what);

Trivalent hypernode_eq(const Hypernode& x, const Hypernode& y);
Trivalent is_standard(const Hypernode& x);

/// [alpha_n]: an ordinal-valued sequence with its eventual class per parity.
struct Hyperordinal {
  std::function<Ordinal(std::uint64_t)> generator;
  ByParity<OrdinalShape> shape;

  Ordinal at(std::uint64_t n) const { return generator(n); }
  static Hyperordinal from_sequences(const IndexSequence& omega, const IndexSequence& finite);
  std::string class_string() const;
};

/// Rank 0 graphs give finite ordinals; 1-graphs give walk distances.
Hyperordinal hyperdistance(const Hypernode& x, const Hypernode& y);

struct HyperComparison {
  Trivalent less = Trivalent::False;
  Trivalent equal = Trivalent::False;
  Trivalent greater = Trivalent::False;
  /// Set when exactly one of the three sets is in every free ultrafilter.
  std::optional<Comparison> result;
  std::string to_string() const;
};

HyperComparison compare_hyperordinals(const Hyperordinal& a, const Hyperordinal& b);

struct Hyperbranch {
  Hypernode x;
  Hypernode y;
  Trivalent standard;
};

/// Throws NotAHyperbranchError when the endpoints are not adjacent for almost
/// all n (flagging the FilterDependent case).
Hyperbranch make_hyperbranch(const Hypernode& x, const Hypernode& y);

// Per-branch helpers shared with the galaxy module.
Eventually eventually_zero(const Shape& s);
Eventually eventually_bounded(const Shape& s);

}  // namespace enl
