#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "enl/shape.hpp"

namespace enl {

inline constexpr std::uint64_t kDefaultHorizon = 512;

/// An integer sequence n -> a_n given by a finite description together with
/// a declared eventual class on each parity branch.
class IndexSequence {
 public:
  struct Declared {
    enum class Kind { Bounded, MonotoneUnbounded };
    Kind kind = Kind::Bounded;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
  };

  static IndexSequence constant(std::int64_t c);
  /// a*n + b
  static IndexSequence affine(std::int64_t a, std::int64_t b);
  /// Evens follow `even`, odds follow `odd` (both evaluated at n itself).
  static IndexSequence parity(const IndexSequence& even, const IndexSequence& odd);
  /// `base` with finitely many values overridden.
  static IndexSequence patched(std::map<std::uint64_t, std::int64_t> overrides, const IndexSequence& base);
  /// prefix[0..len) followed by `tail` for n >= len.
  static IndexSequence explicit_prefix(const std::vector<std::int64_t>& prefix, const IndexSequence& tail);
  /// An opaque generator trusted only as far as its declared class, which is
  /// checked on n < horizon (ValidationError on violation).
  static IndexSequence generated(std::function<std::int64_t(std::uint64_t)> fn, Declared declared,
                                 std::uint64_t horizon = kDefaultHorizon);

  std::int64_t at(std::uint64_t n) const;
  ByParity<Shape> shape() const;
  std::string to_string() const;

 private:
  struct Node;
  explicit IndexSequence(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace enl
