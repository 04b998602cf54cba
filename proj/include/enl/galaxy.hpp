#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "enl/hypernode.hpp"
#include "enl/ultrapower.hpp"

namespace enl {

enum class GalaxyRelation { SameGalaxy, DifferentGalaxy, FilterDependent };
std::string to_string(GalaxyRelation r);

struct GalaxyVerdict {
  GalaxyRelation relation = GalaxyRelation::FilterDependent;
  int rank = 0;
  /// d <= bound for almost all n; always set for SameGalaxy. Rank 1 bounds are w*k.
  std::optional<Ordinal> bound;
  /// "K" at rank 0, "w*K" at rank 1.
  std::string bound_string() const;
};

/// Rank 0: d(x_n, y_n) <= k. Rank 1: d(x_n, y_n) <= w*k.
GalaxyVerdict limitedly_distant(const Hypernode& x, const Hypernode& y, int rank);

/// Against the standard hypernode of the graph's anchor.
GalaxyVerdict in_principal_galaxy(const Hypernode& x, int rank);

/// Declared lower bound L(n) on the difference of distance coefficients for
/// n >= from. L must be nondecreasing and unbounded; the chain constructions
/// guarantee this and the horizon check validates the values.
struct GrowthCertificate {
  std::function<std::int64_t(std::uint64_t)> lower;
  std::uint64_t from = 0;
  std::string reason;
};

/// True when z is farther from the principal galaxy than y: the distance
/// coefficient difference d(z_n, x) - d(y_n, x) exceeds every m for almost all n.
/// The symbolic classes decide first; a certificate covers search-derived operands.
Trivalent closer_than(const Hypernode& base, const Hypernode& y, const Hypernode& z, int rank,
                      const std::optional<GrowthCertificate>& certificate = std::nullopt,
                      std::uint64_t horizon = 256);

struct GalaxyChain {
  Hypernode base;
  int rank = 0;
  int depth = 0;
  /// entries[i] represents index i - depth.
  std::vector<Hypernode> entries;
  /// steps[i] certifies that entries[i] is closer than entries[i + 1].
  std::vector<GrowthCertificate> steps;

  const Hypernode& at(int index) const { return entries.at(static_cast<std::size_t>(index + depth)); }
  /// Certificate for entries i < j (by index): differences telescope, so the last step bounds them all.
  const GrowthCertificate& certificate(int i, int j) const;
};

/// Negative indices by iterated compression, positive by iterated expansion.
GalaxyChain build_galaxy_chain(const Hypernode& base, const Hypernode& seed, int depth, int rank);

struct ChainCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Pairwise strict closeness in index order.
ChainCheck verify_chain(const GalaxyChain& chain, std::uint64_t horizon = 256);

/// Greedy shell-following ray from x0 with d(x_n, x0) = n.
Hypernode konig_ray_witness(const GraphInstance& g, const NodeId& x0);

/// 1-hypernode whose walk distance from x0 has omega coefficient >= n at index n,
/// built from layered boundary 1-nodes.
Hypernode boundary_ray_witness(const OneGraph& g, const NodeId& x0);

struct PartialOrderReport {
  /// closer[i][j]: sample[j] farther than sample[i]; nullopt when indeterminate.
  std::vector<std::vector<std::optional<Trivalent>>> closer;
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;
  std::vector<std::pair<std::size_t, std::size_t>> incomparable;
  bool total() const { return incomparable.empty(); }
};

PartialOrderReport verify_partial_order(const std::vector<Hypernode>& sample, const Hypernode& base, int rank);

}  // namespace enl
