#include "enl/shape.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "enl/errors.hpp"

namespace enl {

namespace {

// Lower bound of a Bounded shape whose lower end is unknown.
constexpr std::int64_t kNoLower = std::numeric_limits<std::int64_t>::min();

std::int64_t add64(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("sequence arithmetic overflow");
  return out;
}

std::int64_t mul64(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("sequence arithmetic overflow");
  return out;
}

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

std::string to_string(Trivalent t) {
  switch (t) {
    case Trivalent::True: return "True";
    case Trivalent::False: return "False";
    case Trivalent::FilterDependent: return "FilterDependent";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, Trivalent t) { return os << to_string(t); }

Shape Shape::affine(std::int64_t slope, std::int64_t offset) { return {Kind::Affine, slope, offset}; }

Shape Shape::bounded(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw ValidationError("bounded shape with lo > hi");
  if (lo == hi) return constant(lo);
  return {Kind::Bounded, lo, hi};
}

Shape Shape::at_most(std::int64_t hi) { return {Kind::Bounded, kNoLower, hi}; }

Shape Shape::unbounded(int s) { return {Kind::Unbounded, s >= 0 ? 1 : -1, 0}; }

Shape Shape::indeterminate() { return {Kind::Indeterminate, 0, 0}; }

std::optional<std::int64_t> Shape::lower() const {
  if (kind_ == Kind::Affine && p_ == 0) return q_;
  if (kind_ == Kind::Bounded && p_ != kNoLower) return p_;
  return std::nullopt;
}

std::optional<std::int64_t> Shape::upper() const {
  if (kind_ == Kind::Affine && p_ == 0) return q_;
  if (kind_ == Kind::Bounded) return q_;
  return std::nullopt;
}

bool Shape::diverges_up() const {
  return (kind_ == Kind::Affine && p_ > 0) || (kind_ == Kind::Unbounded && p_ > 0);
}

bool Shape::bounded_above() const {
  return (kind_ == Kind::Affine && p_ <= 0) || kind_ == Kind::Bounded ||
         (kind_ == Kind::Unbounded && p_ < 0);
}

std::optional<int> Shape::eventual_sign() const {
  switch (kind_) {
    case Kind::Affine: return p_ != 0 ? sign(p_) : sign(q_);
    case Kind::Bounded:
      if (p_ != kNoLower && p_ > 0) return 1;
      if (q_ < 0) return -1;
      return std::nullopt;
    case Kind::Unbounded: return static_cast<int>(p_);
    case Kind::Indeterminate: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::int64_t> Shape::exact_at(std::uint64_t n) const {
  if (kind_ != Kind::Affine) return std::nullopt;
  return add64(mul64(p_, static_cast<std::int64_t>(n)), q_);
}

std::string Shape::to_string() const {
  switch (kind_) {
    case Kind::Affine:
      if (p_ == 0) return "const(" + std::to_string(q_) + ")";
      return "affine(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
    case Kind::Bounded:
      return "bounded[" + (p_ == kNoLower ? std::string("-inf") : std::to_string(p_)) + "," +
             std::to_string(q_) + "]";
    case Kind::Unbounded: return p_ > 0 ? "unbounded(+)" : "unbounded(-)";
    case Kind::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Shape& s) { return os << s.to_string(); }

Shape operator+(const Shape& x, const Shape& y) {
  using K = Shape::Kind;
  if (x.kind() == K::Indeterminate || y.kind() == K::Indeterminate) return Shape::indeterminate();
  // Order the pair so that x.kind() <= y.kind() in enum order.
  if (static_cast<int>(x.kind()) > static_cast<int>(y.kind())) return y + x;
  if (x.kind() == K::Affine) {
    if (y.kind() == K::Affine)
      return Shape::affine(add64(x.slope(), y.slope()), add64(x.offset(), y.offset()));
    if (y.kind() == K::Bounded) {
      if (x.slope() != 0) return Shape::unbounded(sign(x.slope()));
      auto lo = y.lower();
      return lo ? Shape::bounded(add64(*lo, x.offset()), add64(*y.upper(), x.offset()))
                : Shape::at_most(add64(*y.upper(), x.offset()));
    }
    // Unbounded
    if (x.slope() == 0 || sign(x.slope()) == y.direction()) return y;
    return Shape::indeterminate();
  }
  if (x.kind() == K::Bounded) {
    if (y.kind() == K::Bounded) {
      auto lx = x.lower(), ly = y.lower();
      std::int64_t hi = add64(*x.upper(), *y.upper());
      if (lx && ly) return Shape::bounded(add64(*lx, *ly), hi);
      return Shape::at_most(hi);
    }
    return y;  // Unbounded
  }
  return x.direction() == y.direction() ? x : Shape::indeterminate();
}

Shape operator-(const Shape& x) {
  using K = Shape::Kind;
  switch (x.kind()) {
    case K::Affine: return Shape::affine(mul64(-1, x.slope()), mul64(-1, x.offset()));
    case K::Bounded:
      if (!x.lower()) return Shape::indeterminate();
      return Shape::bounded(-*x.upper(), -*x.lower());
    case K::Unbounded: return Shape::unbounded(-x.direction());
    case K::Indeterminate: return x;
  }
  return Shape::indeterminate();
}

Shape abs_of(const Shape& x) {
  using K = Shape::Kind;
  switch (x.kind()) {
    case K::Affine:
      if (x.slope() > 0) return x;
      if (x.slope() < 0) return -x;
      return Shape::constant(x.offset() < 0 ? -x.offset() : x.offset());
    case K::Bounded: {
      auto lo = x.lower();
      if (!lo) return Shape::indeterminate();
      std::int64_t hi = *x.upper();
      if (*lo >= 0) return x;
      if (hi <= 0) return Shape::bounded(-hi, -*lo);
      return Shape::bounded(0, std::max(-*lo, hi));
    }
    case K::Unbounded: return Shape::unbounded(1);
    case K::Indeterminate: return x;
  }
  return Shape::indeterminate();
}

Shape times(const Shape& x, std::int64_t c) {
  using K = Shape::Kind;
  if (c == 0) return Shape::constant(0);
  switch (x.kind()) {
    case K::Affine: return Shape::affine(mul64(x.slope(), c), mul64(x.offset(), c));
    case K::Bounded:
      if (c > 0) {
        auto lo = x.lower();
        std::int64_t hi = mul64(*x.upper(), c);
        return lo ? Shape::bounded(mul64(*lo, c), hi) : Shape::at_most(hi);
      }
      return times(-x, -c);
    case K::Unbounded: return Shape::unbounded(x.direction() * sign(c));
    case K::Indeterminate: return x;
  }
  return Shape::indeterminate();
}

Shape min_of(const Shape& x, const Shape& y) {
  if (auto s = (x - y).eventual_sign()) return *s <= 0 ? x : y;
  using K = Shape::Kind;
  if (x.kind() == K::Unbounded && x.direction() < 0) return x;
  if (y.kind() == K::Unbounded && y.direction() < 0) return y;
  auto ux = x.upper(), uy = y.upper();
  if (!ux && !uy) return Shape::indeterminate();
  std::int64_t hi = ux && uy ? std::min(*ux, *uy) : ux ? *ux : *uy;
  auto lx = x.lower(), ly = y.lower();
  if (lx && ly) return Shape::bounded(std::min({*lx, *ly, hi}), hi);
  return Shape::at_most(hi);
}

Shape max_of(const Shape& x, const Shape& y) {
  if (auto s = (x - y).eventual_sign()) return *s >= 0 ? x : y;
  using K = Shape::Kind;
  if (x.kind() == K::Unbounded && x.direction() > 0) return x;
  if (y.kind() == K::Unbounded && y.direction() > 0) return y;
  auto ux = x.upper(), uy = y.upper();
  if (!ux || !uy) return Shape::indeterminate();
  std::int64_t hi = std::max(*ux, *uy);
  auto lx = x.lower(), ly = y.lower();
  if (!lx && !ly) return Shape::at_most(hi);
  std::int64_t lo = lx && ly ? std::max(*lx, *ly) : lx ? *lx : *ly;
  return Shape::bounded(std::min(lo, hi), hi);
}

Shape select_sign(const Shape& selector, const Shape& neg, const Shape& zero, const Shape& pos) {
  if (auto s = selector.eventual_sign()) return *s < 0 ? neg : *s == 0 ? zero : pos;
  if (neg == zero && zero == pos) return zero;
  auto lo = selector.lower();
  auto hi = selector.upper();
  if (lo && *lo >= 0 && zero == pos) return zero;
  if (hi && *hi <= 0 && neg == zero) return zero;
  return Shape::indeterminate();
}

Shape clamp_nonnegative(const Shape& x) {
  using K = Shape::Kind;
  switch (x.kind()) {
    case K::Affine:
      if (x.slope() < 0) return Shape::constant(0);
      if (x.slope() == 0 && x.offset() < 0) return Shape::constant(0);
      return x;
    case K::Bounded: {
      auto lo = x.lower();
      std::int64_t hi = std::max<std::int64_t>(*x.upper(), 0);
      return Shape::bounded(lo ? std::max<std::int64_t>(*lo, 0) : 0, hi);
    }
    case K::Unbounded: return x.direction() > 0 ? x : Shape::constant(0);
    case K::Indeterminate: return x;
  }
  return x;
}

std::int64_t abs_of(std::int64_t x) {
  if (x == std::numeric_limits<std::int64_t>::min()) throw OverflowError("abs overflow");
  return x < 0 ? -x : x;
}
std::int64_t min_of(std::int64_t x, std::int64_t y) { return std::min(x, y); }
std::int64_t max_of(std::int64_t x, std::int64_t y) { return std::max(x, y); }
std::int64_t times(std::int64_t x, std::int64_t c) { return mul64(x, c); }
std::int64_t select_sign(std::int64_t selector, std::int64_t neg, std::int64_t zero, std::int64_t pos) {
  return selector < 0 ? neg : selector == 0 ? zero : pos;
}

}  // namespace enl
