#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace enl {

enum class Trivalent { True, False, FilterDependent };

std::string to_string(Trivalent t);
std::ostream& operator<<(std::ostream& os, Trivalent t);

/// Eventual behaviour of an integer sequence restricted to one residue class of n
/// (the even indices or the odd indices).
///
/// Affine(a, b)   the value is exactly a*n + b for all sufficiently large n
/// Bounded(lo,hi) lo <= value <= hi for all sufficiently large n
/// Unbounded(s)   the value tends to +infinity (s = +1) or -infinity (s = -1)
/// Indeterminate  nothing is known
///
/// The operations form a closed table; any combination the table cannot
/// decide yields Indeterminate rather than a guess.
class Shape {
 public:
  enum class Kind : std::uint8_t { Affine, Bounded, Unbounded, Indeterminate };

  Shape() = default;

  static Shape affine(std::int64_t slope, std::int64_t offset);
  static Shape constant(std::int64_t c) { return affine(0, c); }
  static Shape bounded(std::int64_t lo, std::int64_t hi);
  /// Bounded above by hi with no known lower bound.
  static Shape at_most(std::int64_t hi);
  static Shape unbounded(int sign);
  static Shape indeterminate();

  Kind kind() const { return kind_; }
  bool is_indeterminate() const { return kind_ == Kind::Indeterminate; }
  bool is_constant() const { return kind_ == Kind::Affine && p_ == 0; }
  std::int64_t slope() const { return p_; }
  std::int64_t offset() const { return q_; }
  /// For Bounded the bounds; for constants the value twice.
  std::optional<std::int64_t> lower() const;
  std::optional<std::int64_t> upper() const;
  int direction() const { return static_cast<int>(p_); }

  /// Tends to +infinity (grows beyond every standard natural).
  bool diverges_up() const;
  /// Bounded above eventually.
  bool bounded_above() const;

  /// Eventual sign: -1, 0 or +1, or nullopt when undetermined.
  std::optional<int> eventual_sign() const;

  /// Value at index n when the shape is exact (Affine), for consistency checks.
  std::optional<std::int64_t> exact_at(std::uint64_t n) const;

  bool operator==(const Shape&) const = default;

  std::string to_string() const;

  friend Shape operator+(const Shape& x, const Shape& y);
  friend Shape operator-(const Shape& x);
  friend Shape operator-(const Shape& x, const Shape& y) { return x + (-y); }

 private:
  Shape(Kind kind, std::int64_t p, std::int64_t q) : kind_(kind), p_(p), q_(q) {}
  Kind kind_ = Kind::Indeterminate;
  // Affine: slope, offset. Bounded: lo, hi. Unbounded: sign, 0.
  std::int64_t p_ = 0;
  std::int64_t q_ = 0;
};

Shape abs_of(const Shape& x);
Shape min_of(const Shape& x, const Shape& y);
Shape max_of(const Shape& x, const Shape& y);
Shape times(const Shape& x, std::int64_t c);
/// Chooses neg / zero / pos by the eventual sign of `selector`.
Shape select_sign(const Shape& selector, const Shape& neg, const Shape& zero, const Shape& pos);
/// Intersects with [0, inf); used on distance shapes.
Shape clamp_nonnegative(const Shape& x);

std::ostream& operator<<(std::ostream& os, const Shape& s);

// Concrete counterparts so that one closed form serves both evaluation modes.
std::int64_t abs_of(std::int64_t x);
std::int64_t min_of(std::int64_t x, std::int64_t y);
std::int64_t max_of(std::int64_t x, std::int64_t y);
std::int64_t times(std::int64_t x, std::int64_t c);
std::int64_t select_sign(std::int64_t selector, std::int64_t neg, std::int64_t zero, std::int64_t pos);
inline std::int64_t clamp_nonnegative(std::int64_t x) { return x < 0 ? 0 : x; }

/// Pair of shapes for an ordinal-valued sequence w*omega + finite.
template <class V>
struct OrdinalTerm {
  V omega;
  V finite;
};

using OrdinalShape = OrdinalTerm<Shape>;

/// Per-parity description of a sequence: evens and odds may behave differently.
template <class T>
struct ByParity {
  T even;
  T odd;

  static ByParity both(const T& t) { return {t, t}; }
  const T& operator[](std::uint64_t n) const { return n % 2 == 0 ? even : odd; }
  bool uniform() const { return even == odd; }
};

}  // namespace enl
