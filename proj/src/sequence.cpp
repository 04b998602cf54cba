#include "enl/sequence.hpp"

#include <variant>

#include "enl/errors.hpp"

namespace enl {

namespace {

struct Affine {
  std::int64_t a, b;
};
struct Parity {
  IndexSequence even, odd;
};
struct Patched {
  std::map<std::uint64_t, std::int64_t> overrides;
  IndexSequence base;
};
struct Generated {
  std::function<std::int64_t(std::uint64_t)> fn;
  IndexSequence::Declared declared;
};

}  // namespace

struct IndexSequence::Node {
  std::variant<Affine, Parity, Patched, Generated> v;
};

IndexSequence IndexSequence::constant(std::int64_t c) { return affine(0, c); }

IndexSequence IndexSequence::affine(std::int64_t a, std::int64_t b) {
  return IndexSequence(std::make_shared<Node>(Node{Affine{a, b}}));
}

IndexSequence IndexSequence::parity(const IndexSequence& even, const IndexSequence& odd) {
  return IndexSequence(std::make_shared<Node>(Node{Parity{even, odd}}));
}

IndexSequence IndexSequence::patched(std::map<std::uint64_t, std::int64_t> overrides, const IndexSequence& base) {
  return IndexSequence(std::make_shared<Node>(Node{Patched{std::move(overrides), base}}));
}

IndexSequence IndexSequence::explicit_prefix(const std::vector<std::int64_t>& prefix, const IndexSequence& tail) {
  std::map<std::uint64_t, std::int64_t> o;
  for (std::size_t i = 0; i < prefix.size(); ++i) o[i] = prefix[i];
  return patched(std::move(o), tail);
}

IndexSequence IndexSequence::generated(std::function<std::int64_t(std::uint64_t)> fn, Declared declared,
                                       std::uint64_t horizon) {
  if (!fn) throw ValidationError("generated sequence without a generator");
  if (declared.kind == Declared::Kind::Bounded && declared.lo > declared.hi)
    throw ValidationError("declared bounds with lo > hi");
  std::int64_t prev = 0;
  for (std::uint64_t n = 0; n < horizon; ++n) {
    std::int64_t v = fn(n);
    if (declared.kind == Declared::Kind::Bounded && (v < declared.lo || v > declared.hi))
      throw ValidationError("generated value " + std::to_string(v) + " at n=" + std::to_string(n) +
                            " violates the declared bounds");
    if (declared.kind == Declared::Kind::MonotoneUnbounded && n > 0 && v < prev)
      throw ValidationError("generated sequence decreases at n=" + std::to_string(n));
    prev = v;
  }
  if (declared.kind == Declared::Kind::MonotoneUnbounded && horizon > 1 && fn(0) == prev)
    throw ValidationError("declared unbounded sequence is constant on the checked prefix");
  return IndexSequence(std::make_shared<Node>(Node{Generated{std::move(fn), declared}}));
}

std::int64_t IndexSequence::at(std::uint64_t n) const {
  return std::visit(
      [n](const auto& s) -> std::int64_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Affine>) {
          std::int64_t out = 0;
          if (__builtin_mul_overflow(s.a, static_cast<std::int64_t>(n), &out) ||
              __builtin_add_overflow(out, s.b, &out))
            throw OverflowError("sequence value overflows at n=" + std::to_string(n));
          return out;
        } else if constexpr (std::is_same_v<T, Parity>) {
          return n % 2 == 0 ? s.even.at(n) : s.odd.at(n);
        } else if constexpr (std::is_same_v<T, Patched>) {
          auto it = s.overrides.find(n);
          return it != s.overrides.end() ? it->second : s.base.at(n);
        } else {
          return s.fn(n);
        }
      },
      node_->v);
}

ByParity<Shape> IndexSequence::shape() const {
  return std::visit(
      [](const auto& s) -> ByParity<Shape> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Affine>) {
          return ByParity<Shape>::both(Shape::affine(s.a, s.b));
        } else if constexpr (std::is_same_v<T, Parity>) {
          return {s.even.shape().even, s.odd.shape().odd};
        } else if constexpr (std::is_same_v<T, Patched>) {
          return s.base.shape();
        } else {
          if (s.declared.kind == IndexSequence::Declared::Kind::Bounded)
            return ByParity<Shape>::both(Shape::bounded(s.declared.lo, s.declared.hi));
          return ByParity<Shape>::both(Shape::unbounded(1));
        }
      },
      node_->v);
}

std::string IndexSequence::to_string() const {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Affine>) {
          if (s.a == 0) return "const(" + std::to_string(s.b) + ")";
          return "affine(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
        } else if constexpr (std::is_same_v<T, Parity>) {
          return "parity(" + s.even.to_string() + "," + s.odd.to_string() + ")";
        } else if constexpr (std::is_same_v<T, Patched>) {
          std::string out = "patch(" + s.base.to_string() + ";";
          bool first = true;
          for (auto [n, v] : s.overrides) {
            out += (first ? " " : ",") + std::to_string(n) + "=" + std::to_string(v);
            first = false;
          }
          return out + ")";
        } else {
          if (s.declared.kind == IndexSequence::Declared::Kind::Bounded)
            return "generated[" + std::to_string(s.declared.lo) + ".." + std::to_string(s.declared.hi) + "]";
          return "generated[monotone unbounded]";
        }
      },
      node_->v);
}

}  // namespace enl
